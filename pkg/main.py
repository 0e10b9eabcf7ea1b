#!/usr/bin/env python3
"""
g2lts - Main Entry Point

Command-line front end for Lie triple systems of the quaternionic
2-Grassmannian G2(H^{n+2}): construction, verification, classification and
the reproduction of the type, inclusion, embedding and position tables.
Every command writes JSON to standard output.

Exit codes: 0 success, 1 verification failure (report still printed),
2 usage error.
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

# Add parent directory to path to enable imports
sys.path.insert(0, str(Path(__file__).parent))

from src import __version__
from src.cartan.frame import root_data, standard_frame
from src.complex_grassmannian.construct import check_row, claC_list
from src.complex_grassmannian.tangent import m1_subspace
from src.config.manager import config
from src.constructors.build import construct, randomize
from src.constructors.classifier import classify
from src.constructors.descriptor import LtsDescriptor, parse_descriptor
from src.constructors.tables import FULL, MAXIMAL, container_of, containment_witness, type_facts, valid_descriptors
from src.embeddings.centrosome import centrosome_check
from src.embeddings.periods import geodesic_period
from src.embeddings.wedge import build_wedge, complex_restriction, real_restriction, sp3_orbit_tangent
from src.lts.roots import restricted_roots
from src.lts.sampling import char_angle_spectrum, sectional_range
from src.lts.verify import is_lts, rank_of
from src.model.geodesic import geodesic_at, plane_intersection_dim
from src.model.tangent import Plane
from src.utils.errors import ConstructionError, DomainError, G2LtsError
from src.utils.logger import setup_logger
from src.utils.serialization import dump_json, load_json, plane_to_dict, subspace_from_dict, subspace_to_dict, write_json

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

ROOT_ORDER = ("lambda1", "lambda2", "lambda3", "lambda4", "2lambda1", "2lambda2")

Result = Tuple[Dict[str, Any], bool]


class UsageError(Exception):
    """Raised by the parser instead of exiting."""


class Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _parallel_map(func: Callable[[Any], Any], items: Iterable[Any], jobs: int) -> List[Any]:
    """Map in input order, on a thread pool when jobs > 1."""
    items = list(items)
    if jobs <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, items))


def _load_subspace(path: str):
    data = load_json(path)
    if isinstance(data, dict) and "subspace" in data:
        data = data["subspace"]
    return subspace_from_dict(data)


# --- commands ---------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> Result:
    d = parse_descriptor(args.type)
    subspace = construct(d, args.n)
    if args.randomize:
        subspace = randomize(subspace, args.seed)
    return {"type": str(d), "n": args.n, "dim": subspace.dim, "subspace": subspace_to_dict(subspace)}, True


def cmd_verify(args: argparse.Namespace) -> Result:
    subspace = _load_subspace(args.input)
    passed, residual = is_lts(subspace, args.tol)
    report: Dict[str, Any] = {"n": subspace.n, "dim": subspace.dim, "is_lts": passed, "residual": residual}
    if passed and subspace.dim > 0:
        report["rank"] = 1 if subspace.dim == 1 else rank_of(subspace)
        report["roots"] = [root.to_dict() for root in restricted_roots(subspace, args.tol)]
        report["phi"] = list(char_angle_spectrum(subspace))
    return report, passed


def cmd_classify(args: argparse.Namespace) -> Result:
    subspace = _load_subspace(args.input)
    try:
        d = classify(subspace, args.tol)
    except DomainError as e:
        return {"type": None, "error": str(e)}, False
    return {"type": str(d), "n": subspace.n, "dim": subspace.dim}, True


def cmd_roots(args: argparse.Namespace) -> Result:
    data = {datum.label.key: datum for datum in root_data(standard_frame(args.n))}
    roots = []
    for key in ROOT_ORDER:
        datum = data.get(key)
        entry = {"label": key, "multiplicity": 0 if datum is None else datum.multiplicity}
        if datum is not None:
            entry.update({"p": datum.label.p, "q": datum.label.q})
        roots.append(entry)
    return {"n": args.n, "roots": roots, "multiplicities": [r["multiplicity"] for r in roots]}, True


def cmd_curvature(args: argparse.Namespace) -> Result:
    d = parse_descriptor(args.type)
    subspace = construct(d, args.n)
    facts = type_facts(d, args.n)
    report: Dict[str, Any] = {"type": str(d), "n": args.n, "curvature": facts.curvature, "constant": facts.constant_curvature}
    if subspace.dim >= 2:
        low, high = sectional_range(subspace, args.samples, args.seed)
        report["sectional_range"] = [low, high]
    return report, True


def _table_row(item: Tuple[Any, int]) -> Dict[str, Any]:
    d, n = item
    row = type_facts(d, n).to_dict()
    subspace = construct(d, n)
    row["computed_dim"] = subspace.dim
    row["computed_rank"] = 1 if subspace.dim == 1 else rank_of(subspace)
    return row


def cmd_tables(args: argparse.Namespace) -> Result:
    rows = _parallel_map(_table_row, [(d, args.n) for d in valid_descriptors(args.n)], args.jobs)
    passed = all(r["dim"] == r["computed_dim"] and r["rank"] == r["computed_rank"] for r in rows)
    return {"n": args.n, "rows": rows}, passed


def _inclusion_row(item: Tuple[Any, int]) -> Dict[str, Any]:
    d, n = item
    container = container_of(d, n)
    row: Dict[str, Any] = {
        "type": str(d),
        "n": n,
        "container": container if container in (MAXIMAL, FULL) else str(container),
    }
    if not isinstance(container, LtsDescriptor):
        row["passed"] = True
        return row
    try:
        inner, outer = containment_witness(d, n)
    except ConstructionError as e:
        row.update({"passed": False, "error": str(e), "residual": e.residual})
        return row
    residual = max((outer.residual(v) for v in inner.vectors()), default=0.0)
    row.update({"passed": True, "residual": residual})
    return row


def cmd_inclusions(args: argparse.Namespace) -> Result:
    rows = _parallel_map(_inclusion_row, [(d, args.n) for d in valid_descriptors(args.n)], args.jobs)
    return {"n": args.n, "rows": rows}, all(r["passed"] for r in rows)


def cmd_wedge(args: argparse.Namespace) -> Result:
    ws = build_wedge(args.seed)
    reports = {
        "quaternionic": sp3_orbit_tangent(ws),
        "complex": complex_restriction(ws),
        "real": real_restriction(ws),
        "centrosome": centrosome_check(),
    }
    out = {"wedge": ws.to_dict(), **{name: report.to_dict() for name, report in reports.items()}}
    return out, all(report.matches for report in reports.values())


def cmd_complex(args: argparse.Namespace) -> Result:
    m1 = m1_subspace(args.n)
    m1_type = str(classify(m1))
    rows = claC_list(args.n)
    checks = _parallel_map(check_row, rows, args.jobs)
    for row, check in zip(rows, checks):
        check.update({"maximal": row.maximal, "isometry_type": row.isometry_type_name})
    passed = m1_type == f"G2:C{args.n}" and all(c["passed"] for c in checks)
    return {"n": args.n, "m1_type": m1_type, "rows": checks}, passed


def cmd_geodesic(args: argparse.Namespace) -> Result:
    d = parse_descriptor(args.type)
    if d.family != "Geo":
        raise DomainError(f"geodesic needs a Geo type, got {d}")
    n = args.n
    v = construct(d, n).vectors()[0]
    plane = geodesic_at(v, args.t)
    dim = plane_intersection_dim(plane, Plane.origin(n), args.tol)
    period = geodesic_period(d.t)
    return {"type": str(d), "t": args.t, "plane": plane_to_dict(plane), "intersection_dim": dim, "period": period}, True


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "roots": cmd_roots,
    "curvature": cmd_curvature,
    "tables": cmd_tables,
    "inclusions": cmd_inclusions,
    "wedge": cmd_wedge,
    "complex": cmd_complex,
    "geodesic": cmd_geodesic,
}


def build_parser() -> Parser:
    parser = Parser(prog="g2lts", description="Lie triple systems of the quaternionic 2-Grassmannian",
                    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("--version", action="version", version=f"g2lts {__version__}")
    parser.add_argument("--out", help="Also write the JSON result to this file")
    parser.add_argument("--config", help="Path to a JSON configuration file")
    sub = parser.add_subparsers(dest="command", parser_class=Parser)
    sub.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.add_argument("--seed", type=int, default=int(config.get("sampling.seed", 0)), help="Random seed")
        p.add_argument("--tol", type=float, default=None, help="Membership tolerance (configured default)")
        p.add_argument("--jobs", type=int, default=1, help="Worker threads for independent jobs")
        return p

    p = add("construct", "Build an LTS of a given type")
    p.add_argument("--type", required=True, help="Descriptor, e.g. P12:H2 or Geo:t=arctan(1/3)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--randomize", action="store_true", help="Apply a seeded random isotropy element")

    for name, help_text in (("verify", "Check the Lie triple system property"), ("classify", "Type of an LTS")):
        p = add(name, help_text)
        p.add_argument("--in", dest="input", required=True, help="JSON file with a subspace")

    p = add("roots", "Restricted roots of m and their multiplicities")
    p.add_argument("--n", type=int, required=True)

    p = add("curvature", "Curvature data of a constructed type")
    p.add_argument("--type", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=int(config.get("sampling.samples", 200)))

    for name, help_text in (
        ("tables", "Dimension, rank and maximality of every type"),
        ("inclusions", "Containment witnesses for every non-maximal type"),
        ("complex", "Types and positions inside G2(C^{n+2})"),
    ):
        p = add(name, help_text)
        p.add_argument("--n", type=int, required=True)

    add("wedge", "Exterior-algebra HP^2, its restrictions and the Sp2 centrosome")

    p = add("geodesic", "Point of a geodesic through the base point")
    p.add_argument("--type", required=True, help="Geo:t=<angle>")
    p.add_argument("--t", type=float, required=True, help="Time")
    p.add_argument("--n", type=int, default=2)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when omitted)

    Returns:
        Exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"g2lts: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.config:
        config.config_path = Path(args.config)
        config.load()
    log_config = config.get("logging", {})
    logger = setup_logger(
        name="g2lts",
        log_file=log_config.get("log_file") if log_config.get("enabled") else None,
        level=log_config.get("level", "INFO"),
        max_size_mb=log_config.get("max_log_size_mb", 10),
    )
    logger.debug("=" * 60)
    logger.debug(f"g2lts v{__version__}: {args.command}")
    logger.debug("=" * 60)

    try:
        result, passed = COMMANDS[args.command](args)
    except G2LtsError as e:
        logger.error(f"{args.command} failed: {e}")
        print(dump_json({"error": type(e).__name__, "message": str(e)}))
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return EXIT_FAILED

    print(dump_json(result))
    if args.out:
        write_json(result, args.out)
    return EXIT_OK if passed else EXIT_FAILED


def main():
    """Main entry point for the command line"""
    sys.exit(run())


if __name__ == "__main__":
    main()
