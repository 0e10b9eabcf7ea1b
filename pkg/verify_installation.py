#!/usr/bin/env python3
"""
Verification script for the g2lts installation
Run this to verify the core functionality works
"""

import sys
from pathlib import Path

# Add current directory to path
sys.path.insert(0, str(Path(__file__).parent))


def check_imports():
    """Check that all core modules can be imported"""
    print("Checking imports...")
    try:
        from src.config.manager import config  # noqa: F401
        from src.constructors.build import construct  # noqa: F401
        from src.constructors.classifier import classify  # noqa: F401
        from src.embeddings.wedge import build_wedge  # noqa: F401
        from src.complex_grassmannian.construct import claC_list  # noqa: F401
        print("  ✓ All core modules import successfully")
        return True
    except ImportError as e:
        print(f"  ✗ Import failed: {e}")
        return False


def check_quaternions():
    """Check quaternion arithmetic"""
    print("\nChecking quaternion arithmetic...")
    try:
        from src.qlinalg.quaternion import UNIT_I, UNIT_J, UNIT_K

        assert UNIT_I * UNIT_J == UNIT_K
        assert UNIT_J * UNIT_I == -UNIT_K
        print("  ✓ ij = k and ji = -k")
        return True
    except Exception as e:
        print(f"  ✗ Quaternion check failed: {e}")
        return False


def check_roots():
    """Check the restricted root multiplicities at n = 3"""
    print("\nChecking restricted roots...")
    try:
        from src.cartan.frame import root_data, standard_frame

        multiplicities = [d.multiplicity for d in root_data(standard_frame(3))]
        assert multiplicities == [4, 4, 4, 4, 3, 3], multiplicities
        print("  ✓ Multiplicities at n=3 are [4, 4, 4, 4, 3, 3]")
        return True
    except Exception as e:
        print(f"  ✗ Root check failed: {e}")
        return False


def check_round_trip():
    """Construct, verify and classify one type"""
    print("\nChecking construct / verify / classify...")
    try:
        from src.constructors.build import construct
        from src.constructors.classifier import classify
        from src.constructors.descriptor import parse_descriptor
        from src.lts.verify import is_lts

        d = parse_descriptor("P12:H2")
        subspace = construct(d, 5)
        passed, residual = is_lts(subspace)
        assert passed, f"closure residual {residual}"
        assert str(classify(subspace)) == "P12:H2"
        print(f"  ✓ P12:H2 at n=5 is an LTS (residual {residual:.1e}) and classifies back")
        return True
    except Exception as e:
        print(f"  ✗ Round trip failed: {e}")
        return False


def check_config():
    """Check configuration defaults"""
    print("\nChecking configuration...")
    try:
        from src.config.manager import config

        assert config.tolerance("membership") > 0
        assert config.get("sampling.samples") >= 1
        print(f"  ✓ Membership tolerance {config.tolerance('membership')}")
        return True
    except Exception as e:
        print(f"  ✗ Config check failed: {e}")
        return False


def check_dev_dependencies():
    """Check that the test tooling is installed"""
    print("\nChecking development dependencies...")
    optional = {
        "pytest": "Test runner",
        "hypothesis": "Property-based tests",
        "pytest_cov": "Coverage reports",
    }

    missing = []
    for module, description in optional.items():
        try:
            __import__(module)
            print(f"  ✓ {module:15} - {description}")
        except ImportError:
            print(f"  ✗ {module:15} - {description} (not installed)")
            missing.append(module)

    if missing:
        print("\nTo install missing dependencies, run:")
        print("  pip install -r requirements.txt")

    return len(missing) == 0


def main():
    """Run all verification checks"""
    print("=" * 60)
    print("g2lts - Installation Verification")
    print("=" * 60)

    results = [check_imports()]
    if results[0]:
        results.extend([check_quaternions(), check_roots(), check_round_trip(), check_config()])

    print("\n" + "=" * 60)
    if all(results):
        print("✅ All core functionality checks PASSED!")
        print("=" * 60)

        if check_dev_dependencies():
            print("\n✅ All dependencies installed!")
            print("\nTry the command line with:")
            print("  python3 main.py roots --n 3")
        else:
            print("\n⚠️  Some development dependencies are missing.")
            print("The library works; install them to run the test suite.")

        return 0

    print("❌ Some checks FAILED!")
    print("=" * 60)
    return 1


if __name__ == "__main__":
    sys.exit(main())
