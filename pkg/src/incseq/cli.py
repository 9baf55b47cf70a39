"""Command-line interface.

Deterministic text/JSON output; exit 0 on success or verified, 1 on a
verification failure (with a machine-readable witness), 2 on usage
errors.  Defaults: field gf:p for the smallest prime p >= q, embedding
grid:-1 (images 0..q-1) when the characteristic allows, order deglex.
"""

import argparse
import csv
import json
import math
import sys

from . import acceptance, geometry, groebner, interpolation, oracle
from .combinatorics import Embedding, increasing_sequences, parse_embedding
from .field import Field, field_from_string, is_prime, smallest_prime_geq
from .poly import DEGLEX, Polynomial, format_polynomial, mono_to_str, parse_order, parse_polynomial


class RunConfig:
    """Resolved global options; round-trips through its canonical string."""

    __slots__ = ("subcommand", "n", "q", "field_spec", "embedding_spec", "order", "format", "seed")

    def __init__(self, subcommand, n, q, field_spec, embedding_spec, order, format, seed):
        self.subcommand = subcommand
        self.n = n
        self.q = q
        self.field_spec = field_spec
        self.embedding_spec = embedding_spec
        self.order = order
        self.format = format
        self.seed = seed

    def canonical_string(self) -> str:
        parts = [self.subcommand]
        if self.n is not None:
            parts += ["--n", str(self.n)]
        if self.q is not None:
            parts += ["--q", str(self.q)]
        if self.field_spec is not None:
            parts += ["--field", self.field_spec]
        if self.embedding_spec is not None:
            parts += ["--embedding", self.embedding_spec]
        parts += ["--order", self.order, "--format", self.format, "--seed", str(self.seed)]
        return " ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, RunConfig):
            return NotImplemented
        return all(getattr(self, s) == getattr(other, s) for s in self.__slots__)


def _default_field_spec(q: int, prime_power: bool = False) -> str:
    if not prime_power:
        return f"gf:{smallest_prime_geq(q)}"
    if is_prime(q):
        return f"gf:{q}"
    for p in range(2, q):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m == 1 and is_prime(p):
                return f"gf:{p}^{k}"
            break
    raise ValueError(f"q={q} is not a prime power; pass --field explicitly")


def _default_embedding_spec(field: Field, q: int) -> str:
    if field.char == 0 or field.char >= q:
        return "grid:-1"
    if field.size is None or field.size < q:
        raise ValueError(f"field {field!r} cannot embed [{q}]")
    images = field.elements()[:q]
    return "list:" + ",".join(field.format_element(e) for e in images)


def _resolve(args, prime_power_field: bool = False):
    """Field + embedding + order from the global flags, with defaults."""
    if args.q is None:
        raise ValueError("--q is required")
    field_spec = args.field or _default_field_spec(args.q, prime_power_field)
    field = field_from_string(field_spec)
    embedding_spec = args.embedding or _default_embedding_spec(field, args.q)
    emb = parse_embedding(embedding_spec, field, args.q)
    order = parse_order(args.order)
    config = RunConfig(args.subcommand, args.n, args.q, field_spec, embedding_spec,
                       args.order, args.format, args.seed)
    return field, emb, order, config


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_downset(path: str):
    seqs = []
    for line in _read(path).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        seqs.append(tuple(int(v) for v in line.split(",")))
    return seqs


def _basis_for(args, field, emb, order):
    if args.kind == "full":
        return groebner.full_basis(args.n, args.q, emb, order)
    if args.kind == "strict":
        return groebner.strict_basis(args.n, args.q, emb, order)
    if not args.downset_file:
        raise ValueError("--downset-file is required for kind downset")
    points = _read_downset(args.downset_file)
    return groebner.downset_basis(args.n, args.q, points, emb, order,
                                  minimize=getattr(args, "minimize", False))


def cmd_gb(args) -> int:
    field, emb, order, _ = _resolve(args)
    if args.n is None:
        raise ValueError("--n is required")
    gb = _basis_for(args, field, emb, order)
    basis_strs = [format_polynomial(p, order) for p in gb.polynomials]
    sm_strs = [mono_to_str(m) for m in gb.sorted_standard_monomials()]
    payload = {
        "kind": gb.kind,
        "n": gb.n,
        "q": gb.q,
        "order": order.kind,
        "basis": basis_strs,
        "standard_monomials": sm_strs,
        "counts": {"basis": len(basis_strs), "sm": len(sm_strs), "points": len(gb.points)},
        "reduced": gb.is_reduced(),
    }
    lines = [f"kind: {gb.kind}  n: {gb.n}  q: {gb.q}  order: {order.kind}",
             f"basis ({len(basis_strs)}):"]
    lines += [f"  {s}" for s in basis_strs]
    lines.append(f"standard monomials ({len(sm_strs)}): {' '.join(sm_strs)}")
    lines.append(f"points: {len(gb.points)}  reduced: {payload['reduced']}")
    _emit(args, payload, lines)
    return 0


def cmd_sm(args) -> int:
    field, emb, order, _ = _resolve(args)
    if args.n is None:
        raise ValueError("--n is required")
    gb = _basis_for(args, field, emb, order)
    sm_strs = [mono_to_str(m) for m in gb.sorted_standard_monomials()]
    payload = {"kind": gb.kind, "n": gb.n, "q": gb.q, "order": order.kind,
               "standard_monomials": sm_strs,
               "counts": {"sm": len(sm_strs), "points": len(gb.points)}}
    _emit(args, payload, [f"standard monomials ({len(sm_strs)}): {' '.join(sm_strs)}"])
    return 0


def cmd_hilbert(args) -> int:
    if args.n is None or args.q is None:
        raise ValueError("--n and --q are required")
    smax = args.q - 1 if args.kind == "full" else args.q - args.n
    svals = [args.s] if args.s is not None else list(range(max(smax, 0) + 1))
    values = []
    for s in svals:
        hv = groebner.hilbert_value(args.kind, args.n, args.q, s)
        values.append({"s": s, "value": hv.value, "closed_form": hv.closed_form})
    payload = {"kind": args.kind, "n": args.n, "q": args.q, "values": values}
    lines = [f"h({v['s']}) = {v['value']}" + ("" if v["closed_form"] else "  (saturated)")
             for v in values]
    _emit(args, payload, lines)
    return 0


def cmd_interp(args) -> int:
    field, emb, order, _ = _resolve(args)
    if args.n is None:
        raise ValueError("--n is required")
    if (args.point is None) == (args.values is None):
        raise ValueError("pass exactly one of --point or --values")
    if args.point is not None:
        seq = tuple(int(v) for v in args.point.split(","))
        ip = interpolation.indicator(seq, args.n, args.q, emb)
        payload = {
            "point": list(seq),
            "expanded": format_polynomial(ip.expanded, order),
            "degree": ip.expanded.degree(),
        }
        lines = [f"expanded: {payload['expanded']}"]
        if args.factored:
            if ip.factored is None:
                payload["factored"] = None
                lines.append("factored: unavailable (embedding is not a grid)")
            else:
                payload["factored"] = {
                    "scalar": field.format_element(ip.factored.scalar),
                    "factors": [format_polynomial(f, order) for f in ip.factored.factors],
                }
                lines.append(f"factored: scalar {payload['factored']['scalar']}, factors "
                             + " | ".join(payload["factored"]["factors"]))
        _emit(args, payload, lines)
        return 0
    values = {}
    with open(args.values, "r", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().startswith("#"):
                continue
            seq = tuple(int(v) for v in row[:-1])
            values[seq] = field.parse_element(row[-1])
    result = interpolation.interpolate(values, args.n, args.q, emb)
    payload = {"polynomial": format_polynomial(result, order), "degree": result.degree()}
    _emit(args, payload, [f"polynomial: {payload['polynomial']}"])
    return 0


def cmd_nonvanish(args) -> int:
    field, emb, order, _ = _resolve(args)
    if args.n is None:
        raise ValueError("--n is required")
    f = parse_polynomial(args.poly, field, args.n)
    witness = groebner.nonvanishing_point(f, args.kind, args.n, args.q, emb)
    if witness is None:
        _emit(args, {"zero": True}, ["zero polynomial: vanishes everywhere by definition"])
        return 0
    payload = {"zero": False, "witness": geometry.format_point(witness),
               "value": field.format_element(f.evaluate(witness))}
    _emit(args, payload, [f"witness: {payload['witness']}  value: {payload['value']}"])
    return 0


def cmd_oracle(args) -> int:
    builtin = None
    if args.builtin:
        kind, spec = args.builtin.split(":", 1)
        n, q = (int(v) for v in spec.split(","))
        if args.q is not None and q != args.q:
            raise ValueError("--q disagrees with the builtin spec")
        strict = {"jnq": False, "sjnq": True}.get(kind)
        if strict is None:
            raise ValueError(f"unknown builtin {kind!r}: expected jnq:n,q or sjnq:n,q")
        args.q = q
        builtin = (n, q, strict)
    field, emb, order, _ = _resolve(args)
    if args.points:
        if args.n is None:
            raise ValueError("--n is required with --points")
        ps = geometry.parse_points(_read(args.points), field, args.n)
        pts = ps.sorted_points()
    elif builtin:
        n, q, strict = builtin
        pts = [emb.apply(s) for s in increasing_sequences(n, q, strict)]
    else:
        raise ValueError("pass --points FILE or --builtin jnq:n,q")
    if args.oracle_op == "sm":
        sm = oracle.standard_monomials(pts, order)
        sm_strs = [mono_to_str(m) for m in sorted(sm, key=order.key)]
        payload = {"standard_monomials": sm_strs, "counts": {"sm": len(sm_strs), "points": len(set(pts))}}
        _emit(args, payload, [f"standard monomials ({len(sm_strs)}): {' '.join(sm_strs)}"])
        return 0
    if args.maxdeg is None:
        raise ValueError("--maxdeg is required for oracle vanish")
    vp = oracle.vanishing_polynomial(pts, args.maxdeg, order)
    if vp is None:
        _emit(args, {"vanishing": None}, [f"no nonzero polynomial of degree <= {args.maxdeg} vanishes on the set"])
        return 0
    payload = {"vanishing": format_polynomial(vp, order), "degree": vp.degree()}
    _emit(args, payload, [f"vanishing polynomial: {payload['vanishing']}"])
    return 0


def _load_pointset(args, field) -> geometry.PointSet:
    if args.n is None:
        raise ValueError("--n is required")
    return geometry.parse_points(_read(getattr(args, "infile")), field, args.n)


def cmd_kakeya(args) -> int:
    if args.kakeya_op == "paper-example":
        K = geometry.optimal_kakeya_f3()
        payload = {"size": len(K), "points": geometry.format_points(K).splitlines()}
        lines = [f"size: {len(K)}"] + payload["points"]
        if args.verify:
            emb = Embedding.grid(K.field, 3, -1)
            cert = geometry.verify_kakeya(K, emb, 3)
            payload["verified"] = cert.ok
            payload["bound"] = math.comb(5, 3)
            lines.append(f"verified at threshold 3: {cert.ok}; size {len(K)} = bound {math.comb(5, 3)}")
            _emit(args, payload, lines)
            return 0 if cert.ok else 1
        _emit(args, payload, lines)
        return 0
    field, emb, order, _ = _resolve(args, prime_power_field=True)
    if args.kakeya_op == "build-t":
        if args.n is None:
            raise ValueError("--n is required")
        T = geometry.line_star(args.n, args.q, field, emb)
        bound = geometry.line_star_size_bound(args.n, args.q)
        payload = {"n": args.n, "q": args.q, "size": len(T), "size_bound": bound,
                   "points": geometry.format_points(T).splitlines()}
        _emit(args, payload, [f"size: {len(T)} (bound {bound})"] + payload["points"])
        return 0
    # verify
    K = _load_pointset(args, field)
    threshold = args.threshold if args.threshold is not None else args.q
    result = geometry.verify_kakeya(K, emb, threshold)
    if result.ok:
        payload = {"ok": True, "threshold": threshold, "size": len(K),
                   "entries": [{"direction": geometry.format_point(v), "base": geometry.format_point(b)}
                               for v, b in result.entries]}
        _emit(args, payload, [f"certified: {len(result.entries)} directions at threshold {threshold}"]
              + [f"  direction {e['direction']}: base {e['base']}" for e in payload["entries"]])
        return 0
    payload = {"ok": False, "threshold": threshold,
               "failed_direction": geometry.format_point(result.direction)}
    _emit(args, payload, [f"FAILED: no line at threshold {threshold} in direction {payload['failed_direction']}"])
    return 1


def cmd_nikodym(args) -> int:
    field, emb, order, _ = _resolve(args, prime_power_field=True)
    B = _load_pointset(args, field)
    result = geometry.verify_nikodym(B, emb)
    if result.ok:
        bound = geometry.nikodym_bound_check(B, emb)
        payload = {"ok": True, "size": len(B), "bound": bound.bound,
                   "entries": [{"point": geometry.format_point(z), "direction": geometry.format_point(v)}
                               for z, v in result.entries]}
        _emit(args, payload, [f"certified: {len(result.entries)} points; size {len(B)} >= bound {bound.bound}"]
              + [f"  point {e['point']}: direction {e['direction']}" for e in payload["entries"]])
        return 0
    payload = {"ok": False, "failed_point": geometry.format_point(result.point)}
    _emit(args, payload, [f"FAILED: no punctured line through {payload['failed_point']}"])
    return 1


def cmd_cover(args) -> int:
    field, emb, order, _ = _resolve(args)
    if args.n is None:
        raise ValueError("--n is required")
    excluded = [tuple(int(v) for v in item.split(",")) for item in (args.exclude or [])]
    if args.cover_op == "search":
        result = geometry.cover_search(args.n, args.q, field, emb, excluded)
        payload = {"minimum": result.minimum, "bound": result.bound,
                   "witness": [geometry.format_hyperplane(h) for h in result.witness]}
        _emit(args, payload, [f"minimum: {result.minimum} (lower bound {result.bound})"]
              + [f"  {s}" for s in payload["witness"]])
        return 0
    planes = geometry.parse_hyperplanes(_read(args.planes), field, args.n)
    result = geometry.cover_verify(planes, args.n, args.q, emb, excluded)
    if result.ok:
        payload = {"covered": True, "size": result.size, "bound": result.bound,
                   "excluded": len(excluded)}
        _emit(args, payload, [f"covered: {result.size} hyperplanes (bound {result.bound})"])
        return 0
    payload = {"covered": False, "uncovered_point": geometry.format_point(result.uncovered_point)}
    _emit(args, payload, [f"NOT COVERED: point {payload['uncovered_point']}"])
    return 1


def cmd_verify_all(args) -> int:
    results = acceptance.run_all(args.max_n, args.max_q, args.seed)
    if args.format == "json":
        payload = [{"index": r.index, "name": r.name, "passed": r.passed, "detail": r.detail}
                   for r in results]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="number of variables / sequence length")
    common.add_argument("--q", type=int, default=None, help="alphabet size: sequences take values in 1..q")
    common.add_argument("--field", default=None, help="gf:p, gf:p^k, or rational (default: gf of the smallest prime >= q)")
    common.add_argument("--embedding", default=None, help="grid:<a> or list:<e1>,... (default grid:-1, images 0..q-1)")
    common.add_argument("--order", default="deglex", choices=["lex", "deglex"])
    common.add_argument("--format", default="text", choices=["text", "json"])
    common.add_argument("--seed", type=int, default=0, help="seed for the randomized property suites")

    parser = argparse.ArgumentParser(prog="incseq",
                                     description="Vanishing ideals of increasing sequences: closed-form "
                                                 "Groebner bases, interpolation, and Kakeya/Nikodym/cover verifiers.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gb", parents=[common], help="construct a closed-form Groebner basis")
    p.add_argument("--kind", default="full", choices=["full", "strict", "downset"])
    p.add_argument("--downset-file", default=None, help="one sequence per line, comma-separated entries")
    p.add_argument("--minimize", action="store_true", help="drop downset-basis members with divisible leading monomials")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("sm", parents=[common], help="standard monomials only")
    p.add_argument("--kind", default="full", choices=["full", "strict", "downset"])
    p.add_argument("--downset-file", default=None)
    p.set_defaults(func=cmd_sm)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function values")
    p.add_argument("--kind", default="full", choices=["full", "strict"])
    p.add_argument("--s", type=int, default=None, help="single argument s (default: the whole valid range)")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("interp", parents=[common], help="indicator polynomials and interpolation")
    p.add_argument("--point", default=None, help="distinguished sequence, e.g. 1,2,2,4,4")
    p.add_argument("--factored", action="store_true", help="also emit the grid factored form")
    p.add_argument("--values", default=None, help="CSV file: sequence entries..., value")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("nonvanish", parents=[common], help="nonvanishing witness below the degree bound")
    p.add_argument("--poly", required=True, help="polynomial string, e.g. 'x1 - x2'")
    p.add_argument("--kind", default="full", choices=["full", "strict"])
    p.set_defaults(func=cmd_nonvanish)

    p = sub.add_parser("oracle", parents=[common], help="evaluation-matrix ground truth")
    p.add_argument("oracle_op", choices=["sm", "vanish"])
    p.add_argument("--points", default=None, help="point file: one point per line, comma-separated elements")
    p.add_argument("--builtin", default=None, help="jnq:n,q or sjnq:n,q")
    p.add_argument("--maxdeg", type=int, default=None, help="degree cap for vanish")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("kakeya", parents=[common], help="increasing Kakeya sets")
    p.add_argument("kakeya_op", choices=["build-t", "paper-example", "verify"])
    p.add_argument("--in", dest="infile", default=None, help="point file to verify")
    p.add_argument("--threshold", type=int, default=None, help="line-intersection threshold (default q)")
    p.add_argument("--verify", action="store_true", help="verify the built-in example")
    p.set_defaults(func=cmd_kakeya)

    p = sub.add_parser("nikodym", parents=[common], help="increasing Nikodym sets")
    p.add_argument("nikodym_op", choices=["verify"])
    p.add_argument("--in", dest="infile", default=None, help="point file to verify")
    p.set_defaults(func=cmd_nikodym)

    p = sub.add_parser("cover", parents=[common], help="affine hyperplane covers")
    p.add_argument("cover_op", choices=["verify", "search"])
    p.add_argument("--planes", default=None, help="hyperplane file: <n1>,...,<nn>;<offset> per line")
    p.add_argument("--exclude", action="append", default=None, help="excluded sequence, e.g. 1,1 (repeatable)")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance criteria")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-q", type=int, default=4)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
