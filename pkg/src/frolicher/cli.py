"""Command-line front end.

Exit codes: 0 success, 1 domain error (validation failure, inadmissible
parameters, inference or verification mismatch) with the report on stderr,
2 I/O or parse error.  Tables render with p increasing left to right and q
increasing bottom to top.
"""

import argparse
import sys

from . import serialize
from .bicomplex import InvalidComplexError, require_valid, validate
from .cohomology import (aeppli, arithmetic_genus, bott_chern, de_rham,
                         dolbeault, row_cohomology)
from .s6 import (DiamondParams, InadmissibleParamsError,
                 InferenceMismatchError, check_constraints, enumerate_diamonds,
                 infer_params, model_multiset, predicted_tables,
                 realize_model, verify_model)
from .serialize import ParseError
from .spectral import (degeneration_page, pages_explicit, pages_filtration,
                       stable_page_index)
from .zigzag import (GridError, ShapeError, canonicalize_shape,
                     contribution_profile, synthesize)

DOMAIN_ERRORS = (InvalidComplexError, InadmissibleParamsError,
                 InferenceMismatchError, ShapeError, GridError)


def render_grid(grid):
    """Rows q_max down to 0, columns p = 0 .. p_max."""
    pn, qn = grid.shape
    cells = [[str(int(grid[p, q])) for p in range(pn)] for q in range(qn)]
    width = max(4, max(len(c) for row in cells for c in row) + 1,
                len(f"p={pn - 1}") + 1)
    lines = []
    for q in range(qn - 1, -1, -1):
        lines.append(f"q={q} |" + "".join(c.rjust(width) for c in cells[q]))
    lines.append("    +" + "-" * (width * pn))
    lines.append("     " + "".join(f"p={p}".rjust(width) for p in range(pn)))
    return "\n".join(lines)


def _load_complex(path):
    with open(path, "r", encoding="utf-8") as fh:
        return serialize.json_to_complex(fh.read())


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_validate(args):
    K = _load_complex(args.file)
    report = validate(K)
    if report:
        for violation in report:
            print(violation, file=sys.stderr)
        return 1
    print("valid")
    return 0


def cmd_cohomology(args):
    K = _load_complex(args.file)
    theory = args.theory
    if theory == "derham":
        b = de_rham(K)
        print("b_k:", " ".join(str(x) for x in b.b))
    elif theory == "genus":
        print(arithmetic_genus(K))
    else:
        table = {"dolbeault": dolbeault, "row": row_cohomology,
                 "bc": bott_chern, "aeppli": aeppli}[theory](K)
        print(f"{table.theory}:")
        print(render_grid(table.grid))
    return 0


def cmd_pages(args):
    K = _load_complex(args.file)
    require_valid(K)
    r_max = args.max if args.max is not None else stable_page_index(K)
    if r_max < 1:
        print("--max must be at least 1", file=sys.stderr)
        return 1
    if args.method in ("filtration", "both"):
        tables = pages_filtration(K, r_max)
    else:
        tables = pages_explicit(K, r_max)
    if args.method == "both":
        other = pages_explicit(K, r_max)
        for a, b in zip(tables, other):
            if not a.same_entries(b):
                print(f"page {a.r}: filtration and explicit methods disagree",
                      file=sys.stderr)
                print(render_grid(a.grid), file=sys.stderr)
                print(render_grid(b.grid), file=sys.stderr)
                return 1
        print(f"methods agree on pages 1..{r_max}")
    for t in tables:
        print(f"E_{t.r}:")
        print(render_grid(t.grid))
    return 0


def cmd_degeneration(args):
    K = _load_complex(args.file)
    print(degeneration_page(K))
    return 0


def cmd_zigzag_profile(args):
    grid = tuple(args.grid)
    shape = canonicalize_shape(serialize.parse_dot_list(args.dots))
    prof = contribution_profile(shape, grid)
    print(f"shape: {shape}")
    for t in prof.pages:
        print(f"E_{t.r}:")
        print(render_grid(t.grid))
    for name, table in (("dolbeault", prof.dolbeault), ("row", prof.row),
                        ("bott_chern", prof.bott_chern),
                        ("aeppli", prof.aeppli)):
        print(f"{name}:")
        print(render_grid(table.grid))
    print("b_k:", " ".join(str(x) for x in prof.de_rham.b))
    return 0


def cmd_zigzag_synth(args):
    with open(args.file, "r", encoding="utf-8") as fh:
        multiset, grid = serialize.json_to_multiset(fh.read())
    K = synthesize(multiset, grid)
    _write(args.output, serialize.complex_to_json(K))
    print(f"wrote {args.output}")
    return 0


def _params(args):
    return DiamondParams(args.h10, args.h02, args.h11, args.alpha, args.beta)


def cmd_s6_check(args):
    report = check_constraints(_params(args), assume_a0=args.assume_a0)
    if not report.all_hold:
        print(report, file=sys.stderr)
        return 1
    print(report)
    print("admissible")
    return 0


def cmd_s6_enumerate(args):
    diamonds = enumerate_diamonds(args.bound, assume_a0=args.assume_a0,
                                  h11_zero_only=args.h11_zero)
    if args.format == "table":
        print(f"{'h10':>4} {'h02':>4} {'h11':>4} {'alpha':>6} {'beta':>5}")
        for d in diamonds:
            print(f"{d.h10:>4} {d.h02:>4} {d.h11:>4} {d.alpha:>6} {d.beta:>5}")
    else:
        for d in diamonds:
            print(d)
    return 0


def cmd_s6_realize(args):
    K = realize_model(_params(args))
    _write(args.output, serialize.complex_to_json(K))
    print(f"wrote {args.output}")
    return 0


def cmd_s6_predict(args):
    pred = predicted_tables(_params(args))
    for name, table in (("E1", pred.e1), ("E2", pred.e2),
                        ("E_r (r >= 3)", pred.e3plus)):
        print(f"{name}:")
        print(render_grid(table.grid))
    print("bott_chern:")
    print(render_grid(pred.bott_chern.grid))
    print("aeppli:")
    print(render_grid(pred.aeppli.grid))
    print("b_k:", " ".join(str(x) for x in pred.betti.b))
    return 0


def cmd_s6_infer(args):
    K = _load_complex(args.file)
    require_valid(K)
    pages = pages_filtration(K, 2)
    d = infer_params(pages[0], pages[1])
    print(d)
    return 0


def cmd_s6_verify(args):
    d = _params(args)
    mismatches = verify_model(d)
    if mismatches:
        for line in mismatches:
            print(line, file=sys.stderr)
        return 1
    shapes = sum(model_multiset(d).values())
    print(f"verified {d}: all tables match predictions "
          f"({shapes} zigzag summands)")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frolicher",
        description="Exact cohomology and spectral-sequence engine for "
                    "bounded double complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the double complex axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="one cohomology table")
    p.add_argument("file")
    p.add_argument("--theory", required=True,
                   choices=["dolbeault", "row", "derham", "bc", "aeppli",
                            "genus"])
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("pages", help="spectral sequence pages")
    p.add_argument("file")
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--method", default="filtration",
                   choices=["filtration", "explicit", "both"])
    p.set_defaults(func=cmd_pages)

    p = sub.add_parser("degeneration", help="first stable page index")
    p.add_argument("file")
    p.set_defaults(func=cmd_degeneration)

    zz = sub.add_parser("zigzag", help="zigzag shape tools")
    zzsub = zz.add_subparsers(dest="zigzag_command", required=True)
    p = zzsub.add_parser("profile", help="contribution profile of one shape")
    p.add_argument("--dots", required=True,
                   help='shape as "(p,q),(p,q),..."')
    p.add_argument("--grid", type=_grid_arg, default=(3, 3),
                   help="P,Q grid bounds (default 3,3)")
    p.set_defaults(func=cmd_zigzag_profile)
    p = zzsub.add_parser("synth", help="synthesize a multiset file")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_zigzag_synth)

    s6p = sub.add_parser("s6", help="six-sphere diamond tools")
    s6sub = s6p.add_subparsers(dest="s6_command", required=True)

    def add_params(q):
        for name in ("h10", "h02", "h11", "alpha", "beta"):
            q.add_argument(f"--{name}", type=int, required=True)

    p = s6sub.add_parser("check", help="constraint report for one tuple")
    add_params(p)
    p.add_argument("--assume-a0", action="store_true", dest="assume_a0")
    p.set_defaults(func=cmd_s6_check)

    p = s6sub.add_parser("enumerate", help="admissible tuples in a box")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--assume-a0", action="store_true", dest="assume_a0")
    p.add_argument("--h11-zero", action="store_true", dest="h11_zero")
    p.add_argument("--format", default="lines", choices=["table", "lines"])
    p.set_defaults(func=cmd_s6_enumerate)

    p = s6sub.add_parser("realize", help="write the model complex")
    add_params(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_s6_realize)

    p = s6sub.add_parser("predict", help="closed-form tables")
    add_params(p)
    p.set_defaults(func=cmd_s6_predict)

    p = s6sub.add_parser("infer", help="read parameters off a complex")
    p.add_argument("file")
    p.set_defaults(func=cmd_s6_infer)

    p = s6sub.add_parser("verify", help="realize, compute, diff predictions")
    add_params(p)
    p.set_defaults(func=cmd_s6_verify)

    return parser


def _grid_arg(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("grid must be P,Q")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("grid must be two integers")
    if p < 0 or q < 0:
        raise argparse.ArgumentTypeError("grid bounds must be non-negative")
    return p, q


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, InadmissibleParamsError):
            print(exc.report, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
