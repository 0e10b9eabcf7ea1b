#!/usr/bin/env python3
"""
Code quality checks for g2lts

Runs black, pylint, mypy and flake8 over the library, the command line and the tests.
"""

import sys
import subprocess

TARGETS = ["src/", "tests/", "main.py"]


def run_command(cmd: list, description: str) -> bool:
    """
    Run a command and return success status.

    Args:
        cmd: Command to run as list
        description: Description of what's being checked

    Returns:
        True if command succeeded, False otherwise
    """
    print(f"\n{'='*60}")
    print(f"Running: {description}")
    print(f"{'='*60}")

    try:
        result = subprocess.run(cmd, check=False)
    except FileNotFoundError:
        print(f"⚠️  {cmd[0]} not found. Install with: pip install -r requirements.txt")
        return False

    if result.returncode == 0:
        print(f"✅ {description} passed")
        return True
    print(f"❌ {description} failed (exit {result.returncode})")
    return False


CHECKS = [
    (["black", "--check", "--line-length", "120", *TARGETS], "Black formatting"),
    (["pylint", "src/", "main.py", "--max-line-length=120", "--disable=invalid-name"], "Pylint"),
    (["mypy", "src/", "--ignore-missing-imports"], "MyPy type checking"),
    (["flake8", *TARGETS, "--max-line-length=120"], "Flake8 style"),
]


def main():
    """Run all linting and quality checks"""
    print("g2lts - Code Quality Checks")
    print("=" * 60)

    results = [run_command(cmd, description) for cmd, description in CHECKS]

    print(f"\n{'='*60}")
    print("SUMMARY")
    print(f"{'='*60}")
    passed = sum(results)
    print(f"\nPassed: {passed}/{len(results)}")

    if passed == len(results):
        print("\n✅ All checks passed!")
        return 0
    print(f"\n❌ {len(results) - passed} check(s) failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())
