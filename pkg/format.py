#!/usr/bin/env python3
"""
Formats the g2lts sources with Black.
"""

import sys
import subprocess

TARGETS = ["src/", "tests/", "main.py", "setup.py", "lint.py", "format.py", "verify_installation.py"]


def main():
    """Format all Python code"""
    print("Formatting Python code with Black...")

    try:
        result = subprocess.run(["black", "--line-length", "120", *TARGETS], check=False)
    except FileNotFoundError:
        print("❌ Black not found. Install with: pip install black")
        return 1

    if result.returncode == 0:
        print("✅ Code formatting complete!")
        return 0
    print("❌ Formatting failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())
