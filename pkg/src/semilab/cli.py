"""``semilab`` command-line interface.

Exit codes: 0 success, 1 usage error, 2 bad input data, 3 internal
invariant violation (two independent computations disagreed).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .algebra import contracted_algebra, numerical_block_sizes, semigroup_algebra, summary
from .constructions import (
    ReesMatrixSpec,
    adjoin_zero,
    adjoin_zprime,
    b2,
    brandt,
    chain,
    embed_indecomposable,
    munn,
    named_semilattice,
    rees_matrix,
    times0,
)
from .core import Semigroup, find_isomorphism, idempotents, iso_obstruction, kernel
from .enumeration import classification_evidence, classify_b2c, enumerate_semigroups
from .errors import InternalInvariantError, SemilabError
from .indecomposability import (
    PRIME_IDEAL_LIMIT,
    completely_prime_ideals,
    condensation,
    divisibility_graph,
    is_s_indecomposable_algebra,
    is_s_indecomposable_graph,
    kernel_quotient_summary,
)
from .lattice import (
    check_bound,
    is_b2_combinatorial,
    is_b2_combinatorial_via_factors,
    principal_factor,
    verify_prop8,
)
from .sgio import dumps, read_sg

SCHEMA = 1


class UsageError(Exception):
    pass


class InputError(SemilabError):
    pass


def load(path) -> Semigroup:
    """Read a .sg file, prefixing any data error with the file name."""
    try:
        return read_sg(path)
    except SemilabError as exc:
        raise InputError(f"{path}: {exc}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def digest(S: Semigroup) -> str:
    return "sha256:" + hashlib.sha256(dumps(S).encode()).hexdigest()


def analysis_report(S: Semigroup, seed: int = 0) -> dict:
    """Everything the library can say about ``S``, as JSON-ready data."""
    graph_verdict = is_s_indecomposable_graph(S)
    algebra_verdict = is_s_indecomposable_algebra(S)
    primes = completely_prime_ideals(S) if S.n <= PRIME_IDEAL_LIMIT else None
    prime_verdict = None if primes is None else not primes
    verdicts = [v for v in (graph_verdict, algebra_verdict, prime_verdict) if v is not None]
    if len(set(verdicts)) != 1:
        raise InternalInvariantError(
            f"s-indecomposability verdicts disagree: graph={graph_verdict} "
            f"algebra={algebra_verdict} prime-ideal={prime_verdict}"
        )
    comps, _ = condensation(divisibility_graph(S))
    A = semigroup_algebra(S)
    summ = summary(A)
    blocks = numerical_block_sizes(A, seed=seed)
    bnd = check_bound(S)
    b2c = is_b2_combinatorial(S)
    b2c_factors = is_b2_combinatorial_via_factors(S)
    if b2c != b2c_factors:
        raise InternalInvariantError(
            f"B2-combinatorial verdicts disagree: definition={b2c} principal-factors={b2c_factors}"
        )
    factors = []
    for a in range(S.n):
        pf = principal_factor(S, a)
        factors.append({"element": a, "kind": pf.kind, "size": pf.factor.n})
    return {
        "schema": SCHEMA,
        "digest": digest(S),
        "size": S.n,
        "zero": S.zero,
        "idempotents": list(idempotents(S)),
        "kernel": list(kernel(S)),
        "s_indecomposable": {
            "graph": graph_verdict,
            "algebra": algebra_verdict,
            "prime_ideal": prime_verdict,
            "divisibility_components": [list(c) for c in comps],
            "completely_prime_ideal_witness": list(primes[0]) if primes else None,
            "kernel_quotient_summary": list(kernel_quotient_summary(S).as_tuple()),
        },
        "algebra_summary": {
            "dim": summ.dim,
            "radical_dim": summ.radical_dim,
            "num_blocks": summ.num_blocks,
            "one_dim_blocks": summ.one_dim_blocks,
        },
        "blocks": list(blocks),
        "max_subsemilattice": {"size": bnd.max_size, "witness": list(bnd.witness)},
        "bound": {
            "bound": bnd.bound,
            "holds": bnd.holds,
            "tight": bnd.tight,
            "completely_zero_simple": bnd.completely_zero_simple,
            "sqrt_holds": bnd.sqrt_holds,
            "sqrt_tight": bnd.sqrt_tight,
            "brandt_isomorphic": bnd.brandt_isomorphic,
        },
        "b2_combinatorial": {"definition": b2c, "principal_factors": b2c_factors},
        "principal_factors": factors,
    }


def _print_analysis(r: dict, out) -> None:
    si = r["s_indecomposable"]
    p = lambda *a: print(*a, file=out)  # noqa: E731
    p(f"size: {r['size']}")
    p(f"zero: {r['zero']}")
    p(f"idempotents: {r['idempotents']}")
    p(f"kernel: {r['kernel']}")
    p(f"s-indecomposable (divisibility graph): {si['graph']}")
    p(f"s-indecomposable (algebra of S/K_S):   {si['algebra']}  summary {tuple(si['kernel_quotient_summary'])}")
    p(f"s-indecomposable (no prime ideal):     {si['prime_ideal']}")
    if si["completely_prime_ideal_witness"] is not None:
        p(f"  completely prime ideal: {si['completely_prime_ideal_witness']}")
        p(f"  divisibility components: {si['divisibility_components']}")
    a = r["algebra_summary"]
    p(f"algebra: dim {a['dim']}, radical {a['radical_dim']}, blocks {a['num_blocks']}, "
      f"1-dim blocks {a['one_dim_blocks']}; block sizes {r['blocks']}")
    m = r["max_subsemilattice"]
    b = r["bound"]
    p(f"max subsemilattice: {m['size']} {m['witness']}")
    p(f"bound 2*floor((n-1)/4)+1 = {b['bound']}: holds={b['holds']} tight={b['tight']}")
    if b["completely_zero_simple"]:
        p(f"completely 0-simple: sqrt bound holds={b['sqrt_holds']} tight={b['sqrt_tight']} "
          f"brandt={b['brandt_isomorphic']}")
    c = r["b2_combinatorial"]
    p(f"B2-combinatorial: definition={c['definition']} principal-factors={c['principal_factors']}")
    kinds = ", ".join(f"{f['element']}:{f['kind']}" for f in r["principal_factors"])
    p(f"principal factors: {kinds}")


def _prop8_report(S: Semigroup, seed: int) -> dict:
    rep = verify_prop8(S, seed=seed)
    return {
        "schema": SCHEMA,
        "digest": digest(S),
        "size": rep.size,
        "k": rep.k,
        "b2_combinatorial": rep.b2_combinatorial,
        "has_zero": rep.has_zero,
        "summary": list(rep.summary),
        "expected_summary": list(rep.expected_summary),
        "blocks": list(rep.blocks),
        "ideals_checked": rep.ideals_checked,
        "ideals_ok": rep.ideals_ok,
        "quotients_checked": rep.quotients_checked,
        "quotients_ok": rep.quotients_ok,
        "ok": rep.ok,
        "failures": rep.failures,
    }


def _construct(args) -> Semigroup:
    what = args.what
    files = args.files

    def need(k):
        if len(files) != k:
            raise UsageError(f"construct {what} expects {k} file argument(s)")
        return [load(f) for f in files]

    if what == "b2":
        need(0)
        return b2()
    if ":" in what:
        kind, arg = what.split(":", 1)
        need(0)
        if kind == "brandt":
            return brandt(_positive(arg))
        if kind == "chain":
            return chain(_positive(arg))
        if kind == "semilattice":
            try:
                return named_semilattice(arg)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        if kind == "rees":
            try:
                pattern = [[int(ch) for ch in row] for row in arg.split("/")]
            except ValueError:
                raise UsageError("rees pattern looks like 11/01") from None
            return rees_matrix(ReesMatrixSpec.trivial(pattern))
        raise UsageError(f"unknown construction {what!r}")
    if what == "times0":
        A, B = need(2)
        return times0(A, B)
    if what == "adjoin-zero":
        return adjoin_zero(*need(1))
    if what == "zprime":
        return adjoin_zprime(*need(1))
    if what == "embed":
        return embed_indecomposable(*need(1))[0]
    if what == "munn":
        return munn(*need(1))
    raise UsageError(f"unknown construction {what!r}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise UsageError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise UsageError(f"expected a positive integer, got {v}")
    return v


FILTERS = {
    "s-indec": is_s_indecomposable_graph,
    "b2c": is_b2_combinatorial,
    "zero": lambda S: S.zero is not None,
}


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="semilab", description="Finite semigroup analysis.")
    ap.add_argument("--version", action="version", version=f"semilab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a .sg file")
    p.add_argument("file")

    p = sub.add_parser("analyze", help="indecomposability, algebra and subsemilattice report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("algebra", help="semigroup algebra summary")
    p.add_argument("file")
    p.add_argument("--contracted", action="store_true")
    p.add_argument("--blocks", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("construct", help="write a constructed semigroup to stdout")
    p.add_argument("what", help="b2 | brandt:N | chain:N | semilattice:NAME | rees:11/01 | "
                                "times0 | adjoin-zero | zprime | embed | munn")
    p.add_argument("files", nargs="*")

    p = sub.add_parser("iso", help="find an isomorphism between two tables")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("enumerate", help="all semigroups of a small order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--filter", choices=sorted(FILTERS), default=None)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("classify-b2c", help="B2-combinatorial classes of order 1, 5 or 9")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("verify-prop8", help="structure checks for a B2-combinatorial semigroup")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except UsageError as exc:
        print(f"semilab: {exc}", file=err)
        return 1
    except InternalInvariantError as exc:
        print(f"semilab: internal error: {exc}", file=err)
        return 3
    except SemilabError as exc:
        print(f"semilab: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"semilab: {exc.filename}: {exc.strerror}", file=err)
        return 2


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "validate":
        S = load(args.file)
        print(f"{args.file}: valid semigroup, size {S.n}, zero {S.zero}", file=out)
        return 0
    if cmd == "analyze":
        r = analysis_report(load(args.file), seed=args.seed)
        if args.json:
            print(json.dumps(r, indent=2, sort_keys=True), file=out)
        else:
            _print_analysis(r, out)
        return 0
    if cmd == "algebra":
        S = load(args.file)
        A = contracted_algebra(S) if args.contracted else semigroup_algebra(S)
        s = summary(A)
        print(f"dim {s.dim}, radical {s.radical_dim}, blocks {s.num_blocks}, 1-dim blocks {s.one_dim_blocks}",
              file=out)
        if args.blocks:
            print(f"block sizes: {list(numerical_block_sizes(A, seed=args.seed))}", file=out)
        return 0
    if cmd == "construct":
        out.write(dumps(_construct(args)))
        return 0
    if cmd == "iso":
        A, B = load(args.a), load(args.b)
        f = find_isomorphism(A, B)
        if f is None:
            reason = iso_obstruction(A, B) or "exhaustive search found no bijection"
            print(f"not isomorphic: {reason}", file=out)
        else:
            print("isomorphic", file=out)
            for x, y in enumerate(f.map):
                print(f"{x} -> {y}", file=out)
        return 0
    if cmd == "enumerate":
        pred = FILTERS[args.filter] if args.filter else None
        classes = enumerate_semigroups(args.order, pred)
        if args.count_only:
            print(sum(1 for _ in classes), file=out)
        else:
            for k, S in enumerate(classes):
                out.write(dumps(S, comment=f"order {args.order} class {k}"))
                out.write("\n")
        return 0
    if cmd == "classify-b2c":
        classes = classify_b2c(args.order)
        evidence = classification_evidence(args.order)
        print(f"# {len(classes)} B2-combinatorial class(es) of order {args.order}", file=out)
        if args.order == 9:
            print("# candidates: Y x0 B2 for |Y| = 3 and full inverse subsemigroups of the Munn", file=out)
            print("# semigroups of all 5-element semilattices", file=out)
        for C, ev in zip(classes, evidence):
            note = f"class {ev['class']}; sources: " + "; ".join(ev["sources"])
            out.write(dumps(C, comment=note))
            out.write("\n")
        return 0
    if cmd == "verify-prop8":
        r = _prop8_report(load(args.file), args.seed)
        if args.json:
            print(json.dumps(r, indent=2, sort_keys=True), file=out)
        else:
            print(f"size {r['size']} (k = {r['k']}), B2-combinatorial: {r['b2_combinatorial']}", file=out)
            print(f"(i)   zero: {r['has_zero']}", file=out)
            print(f"(ii)  algebra summary {tuple(r['summary'])} expected {tuple(r['expected_summary'])}, "
                  f"blocks {r['blocks']}", file=out)
            print(f"(iii) {r['ideals_checked']} ideals B2-combinatorial: {r['ideals_ok']}", file=out)
            print(f"(iv)  {r['quotients_checked']} quotients B2-combinatorial: {r['quotients_ok']}", file=out)
            for f in r["failures"]:
                print(f"  failure: {f}", file=out)
        return 0 if r["ok"] else 2
    raise UsageError(f"unknown command {cmd}")


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
