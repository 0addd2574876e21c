"""Command line interface.

One subcommand per library operation. Results print as aligned text
tables by default or as deterministic JSON with --format json (numbers
fixed at six decimal places, so identical inputs give identical bytes).
Exit status: 0 on success, 1 on a domain error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import NEGATIONS, TCONORMS, TNORMS, as_unit, make_profile
from .decision import decide
from .errors import PnsError
from .jsonio import decimal_string, load_any, to_document
from .products import and_product, or_product, to_pns_set
from .sets import complement, intersection, union, validate
from .similarity import select_by_similarity, similarity


# ---------------------------------------------------------------------------
# rendering

def _json_number(x) -> str:
    return "%.6f" % float(x)


def _to_jsonable(obj):
    """Recursively dump to JSON text with fixed 6-place numbers."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, (float, Fraction)):
        return _json_number(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_to_jsonable(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_jsonable(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def _num(x) -> str:
    if isinstance(x, Fraction):
        text = decimal_string(x)
        return text if len(text) <= 8 else "%.4f" % float(x)
    return "%.4f" % float(x)


def _table(headers, rows) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))
    def line(cells):
        return "  ".join(cell.ljust(widths[j]) for j, cell in enumerate(cells)).rstrip()
    return "\n".join([line(headers)] + [line(row) for row in rows])


def _set_table(s) -> str:
    headers = [""] + list(s.universe)
    rows = []
    for p, row in zip(s.parameters, s.cells):
        rows.append([p] + [
            f"({_num(c.triple.truth)},{_num(c.triple.indeterminacy)},"
            f"{_num(c.triple.falsity)})|{_num(c.mu)}"
            for c in row])
    return _table(headers, rows)


def _matrix_table(m) -> str:
    headers = [""] + list(m.columns)
    rows = []
    for label, row in zip(m.rows, m.entries):
        name = label if isinstance(label, str) else "*".join(label)
        rows.append([name] + [_num(v) for v in row])
    return _table(headers, rows)


def _matrix_doc(m) -> dict:
    return {
        "rows": ["*".join(r) if not isinstance(r, str) else r for r in m.rows],
        "columns": list(m.columns),
        "entries": [list(row) for row in m.entries],
    }


def _emit_set(s, args) -> None:
    if args.format == "json":
        print(_to_jsonable(to_document(s)))
    else:
        print(_set_table(s))


# ---------------------------------------------------------------------------
# argument helpers

def _unit_arg(text: str):
    try:
        return as_unit(text, "value")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order_arg(text: str):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"p must be an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("p must be >= 1")
    return value


def _add_format(sub):
    sub.add_argument("--format", choices=("table", "json"), default="table",
                     help="output rendering (default: table)")


def _add_profile(sub):
    sub.add_argument("--tnorm", choices=sorted(TNORMS), default="min")
    sub.add_argument("--tconorm", choices=sorted(TCONORMS), default="max")
    sub.add_argument("--negation", choices=sorted(NEGATIONS), default="standard")


def _profile(args):
    return make_profile(tnorm=args.tnorm, tconorm=args.tconorm,
                        negation=args.negation)


# ---------------------------------------------------------------------------
# commands

def _cmd_validate(args) -> int:
    report = {"files": []}
    status = 0
    for path in args.files:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            entry = {"path": str(path), "valid": False,
                     "violations": [f"cannot read: {exc}"]}
        else:
            try:
                doc = json.loads(text, parse_float=Fraction)
            except json.JSONDecodeError as exc:
                entry = {"path": str(path), "valid": False,
                         "violations": [f"JSON parse error at line {exc.lineno}: {exc.msg}"]}
            else:
                violations = validate(doc) if isinstance(doc, dict) else \
                    ["top level JSON value must be an object"]
                entry = {"path": str(path), "valid": not violations,
                         "violations": violations}
        if not entry["valid"]:
            status = 1
        report["files"].append(entry)
    if args.format == "json":
        print(_to_jsonable(report))
    else:
        for entry in report["files"]:
            if entry["valid"]:
                print(f"{entry['path']}: ok")
            else:
                print(f"{entry['path']}: INVALID")
                for v in entry["violations"]:
                    print(f"  - {v}")
    return status


def _cmd_union(args) -> int:
    _emit_set(union(load_any(args.first), load_any(args.second), _profile(args)), args)
    return 0


def _cmd_intersect(args) -> int:
    _emit_set(intersection(load_any(args.first), load_any(args.second), _profile(args)), args)
    return 0


def _cmd_complement(args) -> int:
    _emit_set(complement(load_any(args.set), _profile(args)), args)
    return 0


def _cmd_and_product(args) -> int:
    product = and_product(load_any(args.first), load_any(args.second))
    _emit_set(to_pns_set(product, args.separator), args)
    return 0


def _cmd_or_product(args) -> int:
    product = or_product(load_any(args.first), load_any(args.second))
    _emit_set(to_pns_set(product, args.separator), args)
    return 0


def _cmd_decide(args) -> int:
    report = decide(load_any(args.first), load_any(args.second))
    if args.format == "json":
        doc = {
            "universe": list(report.universe),
            "product": to_document(to_pns_set(report.product, args.separator)),
            "weighted_truth": _matrix_doc(report.weighted_truth),
            "weighted_indeterminacy": _matrix_doc(report.weighted_indeterminacy),
            "weighted_falsity": _matrix_doc(report.weighted_falsity),
            "truth_scores": list(report.truth_scores),
            "indeterminacy_scores": list(report.indeterminacy_scores),
            "falsity_scores": list(report.falsity_scores),
            "decision_scores": list(report.decision_scores),
            "ranking": list(report.ranking),
            "winners": list(report.winners),
        }
        print(_to_jsonable(doc))
        return 0
    print("product:")
    print(_set_table(to_pns_set(report.product, args.separator)))
    for name, matrix in (("weighted truth", report.weighted_truth),
                         ("weighted indeterminacy", report.weighted_indeterminacy),
                         ("weighted falsity", report.weighted_falsity)):
        print(f"\n{name}:")
        print(_matrix_table(matrix))
    print()
    scores = _table(
        [""] + list(report.universe),
        [["truth score"] + [_num(v) for v in report.truth_scores],
         ["indeterminacy score"] + [_num(v) for v in report.indeterminacy_scores],
         ["falsity score"] + [_num(v) for v in report.falsity_scores],
         ["decision score"] + [_num(v) for v in report.decision_scores]])
    print(scores)
    print(f"\nranking: {' > '.join(report.ranking)}")
    print(f"winner: {', '.join(report.winners)}")
    return 0


def _similarity_doc(report) -> dict:
    return {
        "parameters": list(report.parameters),
        "value_components": list(report.value_components),
        "value_similarity": report.value_similarity,
        "possibility_components": list(report.possibility_components),
        "possibility_similarity": report.possibility_similarity,
        "overall": report.overall,
        "p": report.p,
        "threshold": report.threshold,
        "significant": report.significant,
    }


def _cmd_similarity(args) -> int:
    report = similarity(load_any(args.first), load_any(args.second),
                        p=args.p, threshold=args.threshold)
    if args.format == "json":
        print(_to_jsonable(_similarity_doc(report)))
        return 0
    rows = [[p, _num(v), _num(m)] for p, v, m in
            zip(report.parameters, report.value_components,
                report.possibility_components)]
    print(_table(["parameter", "value sim", "possibility sim"], rows))
    print(f"\nvalue similarity:       {_num(report.value_similarity)}")
    print(f"possibility similarity: {_num(report.possibility_similarity)}")
    print(f"overall similarity:     {_num(report.overall)}")
    print(f"significant (>= {_num(report.threshold)}): "
          f"{'yes' if report.significant else 'no'}")
    return 0


def _gather_candidates(paths):
    files = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            inside = sorted(p for p in path.iterdir()
                            if p.suffix.lower() in (".json", ".csv"))
            if not inside:
                raise PnsError(f"directory {path} holds no candidate files")
            files.extend(inside)
        else:
            files.append(path)
    return [(p.stem, load_any(p)) for p in files]


def _cmd_select(args) -> int:
    model = load_any(args.model)
    candidates = _gather_candidates(args.candidates)
    report = select_by_similarity(model, candidates, p=args.p,
                                  threshold=args.threshold)
    if args.format == "json":
        doc = {
            "candidates": [
                {"label": c.label, "overall": c.overall,
                 "significant": c.significant, "error": c.error}
                for c in report.candidates
            ],
            "selected": list(report.selected),
            "significant": list(report.significant),
            "p": report.p,
            "threshold": report.threshold,
        }
        print(_to_jsonable(doc))
    else:
        rows = []
        for c in report.candidates:
            if c.error is not None:
                rows.append([c.label, "-", "-", c.error])
            else:
                rows.append([c.label, _num(c.overall),
                             "yes" if c.significant else "no", ""])
        print(_table(["candidate", "similarity", "significant", "note"], rows))
        print(f"\nselected: {', '.join(report.selected) if report.selected else '(none)'}")
    return 0 if report.selected else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pnsoft",
        description="possibility neutrosophic soft set toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check files against the document schema")
    s.add_argument("files", nargs="+")
    _add_format(s)
    s.set_defaults(func=_cmd_validate)

    for name, func in (("union", _cmd_union), ("intersect", _cmd_intersect)):
        s = sub.add_parser(name, help=f"{name} of two sets")
        s.add_argument("first")
        s.add_argument("second")
        _add_profile(s)
        _add_format(s)
        s.set_defaults(func=func)

    s = sub.add_parser("complement", help="complement of a set")
    s.add_argument("set")
    _add_profile(s)
    _add_format(s)
    s.set_defaults(func=_cmd_complement)

    for name, func in (("and-product", _cmd_and_product),
                       ("or-product", _cmd_or_product)):
        s = sub.add_parser(name, help=f"{name.replace('-', ' ')} over parameter pairs")
        s.add_argument("first")
        s.add_argument("second")
        s.add_argument("--separator", default="*",
                       help="joins the two parameter labels (default: *)")
        _add_format(s)
        s.set_defaults(func=func)

    s = sub.add_parser("decide", help="rank universe elements from two observations")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--separator", default="*")
    _add_format(s)
    s.set_defaults(func=_cmd_decide)

    s = sub.add_parser("similarity", help="similarity measure of two sets")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("-p", type=_order_arg, default=2,
                   help="Minkowski order for the value factor (default: 2)")
    s.add_argument("--threshold", type=_unit_arg, default=Fraction(1, 2),
                   help="significance cutoff (default: 0.5)")
    _add_format(s)
    s.set_defaults(func=_cmd_similarity)

    s = sub.add_parser("select", help="pick the candidate most similar to a model")
    s.add_argument("model")
    s.add_argument("candidates", nargs="+",
                   help="candidate files, or directories of them")
    s.add_argument("-p", type=_order_arg, default=2)
    s.add_argument("--threshold", type=_unit_arg, default=Fraction(1, 2))
    _add_format(s)
    s.set_defaults(func=_cmd_select)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PnsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
