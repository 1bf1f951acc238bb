#!/usr/bin/env python3
"""
Verification script for the distance Seidel spectra toolkit
Checks that the modules import and a few known spectra come out right
"""

import os
import sys


def print_status(message, status="info"):
    """Print colored status messages"""
    colors = {
        "info": "\033[94m",      # Blue
        "success": "\033[92m",   # Green
        "warning": "\033[93m",   # Yellow
        "error": "\033[91m",     # Red
        "reset": "\033[0m"       # Reset
    }

    icons = {
        "info": "ℹ️",
        "success": "✅",
        "warning": "⚠️",
        "error": "❌"
    }

    print(f"{colors[status]}{icons[status]} {message}{colors['reset']}")


def check_file_exists(filepath, description):
    if os.path.exists(filepath):
        print_status(f"{description}: Found", "success")
        return True
    print_status(f"{description}: Missing", "error")
    return False


def check_directory_structure():
    """Check if all required files exist"""
    print_status("Checking project structure...", "info")

    required_files = [
        ("main.py", "Command-line entry point"),
        ("config.py", "Configuration file"),
        ("requirements.txt", "Python dependencies"),
        ("requirements-local.txt", "Local development dependencies"),
        ("analyzers/spectrum_analyzer.py", "Spectrum analyzer"),
        ("analyzers/family_analyzer.py", "Family analyzer"),
        ("analyzers/operation_analyzer.py", "Operation analyzer"),
        ("analyzers/bounds_analyzer.py", "Bounds analyzer"),
        ("analyzers/scan_analyzer.py", "Scan analyzer"),
        ("utils/graph_core.py", "Graph core"),
        ("utils/exact_linalg.py", "Exact linear algebra"),
        ("utils/catalog_loader.py", "Catalog loader"),
        ("data/sample-catalog.g6", "Sample catalog"),
    ]

    all_exist = True
    for filepath, description in required_files:
        if not check_file_exists(filepath, description):
            all_exist = False
    return all_exist


def check_python_dependencies():
    print_status("Checking Python dependencies...", "info")

    required_packages = ["numpy", "pandas"]
    optional_packages = ["pytest", "networkx", "sympy"]

    missing_packages = []
    for package in required_packages:
        try:
            __import__(package)
            print_status(f"Python package '{package}': Installed", "success")
        except ImportError:
            print_status(f"Python package '{package}': Missing", "error")
            missing_packages.append(package)

    for package in optional_packages:
        try:
            __import__(package)
            print_status(f"Test package '{package}': Installed", "success")
        except ImportError:
            print_status(f"Test package '{package}': Missing (needed for the test suite)", "warning")

    if missing_packages:
        print_status("Install missing packages with: pip install -r requirements.txt", "warning")
        return False
    return True


def test_spectra():
    """Known spectra: K4, C4 and the Petersen graph"""
    print_status("Testing spectrum computation...", "info")

    try:
        sys.path.append('.')
        from analyzers.spectrum_analyzer import spectral_summary
        from utils.graph_core import complete_graph, parse_graph6, petersen_graph

        k4 = spectral_summary(complete_graph(4))
        if abs(k4.energy - 6) > 1e-9:
            print_status(f"K4 energy: expected 6, got {k4.energy}", "error")
            return False
        print_status("K4 spectrum {1^3, -3}: OK", "success")

        c4 = spectral_summary(parse_graph6('Cl'))
        if [int(c) for c in c4.char_poly.coefficients] != [1, 0, -22, 24, 45]:
            print_status(f"C4 characteristic polynomial: got {c4.char_poly}", "error")
            return False
        print_status("C4 characteristic polynomial: OK", "success")

        petersen = spectral_summary(petersen_graph())
        if abs(petersen.energy - 50) > 1e-9:
            print_status(f"Petersen energy: expected 50, got {petersen.energy}", "error")
            return False
        print_status("Petersen spectrum {5^5, -1^4, -21}: OK", "success")
        return True

    except Exception as e:
        print_status(f"Spectrum test failed: {str(e)}", "error")
        return False


def test_catalog_scan():
    print_status("Testing catalog scan...", "info")

    try:
        sys.path.append('.')
        from analyzers.scan_analyzer import ScanAnalyzer, ScanOptions
        from utils.catalog_loader import CatalogLoader

        loader = CatalogLoader()
        lines = loader.load_catalog('data/sample-catalog.g6')
        options = ScanOptions(find=frozenset({'cospectral', 'integral'}))
        report = ScanAnalyzer(options).scan_catalog(list(loader.iter_graphs(lines)))
        print_status(f"Sample catalog: {report.connected} connected, "
                     f"{len(report.parse_errors)} rejected line(s)", "success")
        return report.connected == 4
    except Exception as e:
        print_status(f"Catalog scan failed: {str(e)}", "error")
        return False


def generate_setup_report():
    print_status("=" * 60, "info")
    print_status("DISTANCE SEIDEL TOOLKIT - SETUP VERIFICATION", "info")
    print_status("=" * 60, "info")

    checks = [
        ("Project Structure", check_directory_structure),
        ("Python Dependencies", check_python_dependencies),
        ("Spectra", test_spectra),
        ("Catalog Scan", test_catalog_scan),
    ]

    results = {}
    all_passed = True

    for check_name, check_function in checks:
        print_status(f"\n--- {check_name} ---", "info")
        try:
            result = check_function()
            results[check_name] = result
            if not result:
                all_passed = False
        except Exception as e:
            print_status(f"Check failed with error: {str(e)}", "error")
            results[check_name] = False
            all_passed = False

    print_status("\n" + "=" * 60, "info")
    print_status("SETUP VERIFICATION SUMMARY", "info")
    print_status("=" * 60, "info")

    for check_name, result in results.items():
        status = "success" if result else "error"
        print_status(f"{check_name}: {'PASSED' if result else 'FAILED'}", status)

    if all_passed:
        print_status("\n🎉 ALL CHECKS PASSED!", "success")
        print_status("Try: python main.py family --name star --params 10", "info")
    else:
        print_status("\n❌ SOME CHECKS FAILED. Please fix the issues above.", "error")
        print_status("- Install dependencies: pip install -r requirements-local.txt", "warning")
        print_status("- Check Python version: python --version (should be 3.9+)", "warning")

    return all_passed


if __name__ == "__main__":
    sys.exit(0 if generate_setup_report() else 1)
