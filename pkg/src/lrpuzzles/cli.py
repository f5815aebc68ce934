"""Command line front end.

Every command prints tab-separated lines, or a single JSON object with
``--json``.  Exit status: 0 success, 1 usage error, 2 cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (SchubertIndex, format_partition, parse_partition, parse_space,
                   string_codim, string_to_partition)
from .engine import PuzzleInputError, enumerate_fillings, expand_product, render
from .pieces import THEORIES, pieces_for
from .rings import format_coeff, specialize_to_ordinary

__all__ = ["main", "build_parser", "UsageError"]

EPILOG = """\
spaces:   g(k,n) | fl(a,b;n) | fl(a,b,c;n)
theories: h k k-alt ht kt (one step), h2 ht2 (two steps), h3 (three steps)
classes:  digit strings such as 0101 or 102021; on a Grassmannian a
          partition such as 2,1 (or 0 for the empty one) also works
env:      LRPUZZLES_THREADS sets the worker count (default: all CPUs)
"""


class UsageError(Exception):
    pass


class CrossCheckFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- argument helpers ---------------------------------------------------------

def _space(text):
    try:
        return parse_space(text)
    except ValueError as exc:
        raise UsageError(f"--space: {exc}") from None


def _class(text, space):
    """A digit string for ``space``; partitions are accepted on Grassmannians."""
    text = text.strip()
    if len(text) == space.n and text.isdigit() and "," not in text:
        if text not in space.classes():
            raise UsageError(f"{text!r} is not a class of {space}")
        return text
    if not space.is_grassmannian:
        raise UsageError(f"{text!r} is not a digit string of length {space.n}")
    try:
        return SchubertIndex(space.steps[0], space.n, parse_partition(text)).string
    except ValueError as exc:
        raise UsageError(f"class {text!r}: {exc}") from None


def _partition(text, space):
    return string_to_partition(_class(text, space)).lam


def _theory(name, space):
    if name is None:
        name = {1: "h", 2: "h2", 3: "h3"}.get(space.r)
        if name is None:
            raise UsageError(f"no puzzle theory for {space}")
    if name not in THEORIES:
        raise UsageError(f"--theory: unknown theory {name!r}; choose from {' '.join(THEORIES)}")
    if THEORIES[name][0] != space.r:
        raise UsageError(f"--theory: {name} needs a {THEORIES[name][0]}-step space, got {space}")
    return name


def _grassmannian(space, flag="--space"):
    if not space.is_grassmannian:
        raise UsageError(f"{flag}: this command needs a Grassmannian g(k,n), got {space}")
    return space.steps[0], space.n


def _emit(args, lines, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- commands -----------------------------------------------------------------

def cmd_lr(args):
    space = _space(args.space)
    theory = _theory(args.theory, space)
    alpha, beta = _class(args.alpha, space), _class(args.beta, space)
    pieces = pieces_for(theory)
    if args.gamma is not None:
        gamma = _class(args.gamma, space)
        coeff = expand_product(alpha, beta, pieces).get(gamma, pieces.zero())
        _emit(args, [format_coeff(coeff)], {"space": str(space), "theory": theory, "alpha": alpha,
                                            "beta": beta, "gamma": gamma, "coefficient": format_coeff(coeff)})
        return 0
    need_fillings = args.count_puzzles or args.render_dir or args.trace
    fillings = enumerate_fillings(space.n, alpha, beta, pieces) if need_fillings else None
    expansion = expand_product(alpha, beta, pieces)
    lines, payload = [], {"space": str(space), "theory": theory, "alpha": alpha, "beta": beta}
    counts = {}
    if fillings is not None:
        for f in fillings:
            counts[f.gamma] = counts.get(f.gamma, 0) + 1
    for gamma, coeff in expansion.items():
        line = f"{gamma}\t{format_coeff(coeff)}"
        if args.count_puzzles:
            line += f"\t{counts.get(gamma, 0)}"
        lines.append(line)
    payload["expansion"] = {g: format_coeff(c) for g, c in expansion.items()}
    if args.count_puzzles:
        payload["puzzles"] = dict(sorted(counts.items()))
    if args.trace:
        from .trace import trace_filling
        traces = []
        for idx, f in enumerate(fillings, start=1):
            entries = trace_filling(f, theory)
            traces.append({"index": idx, "gamma": f.gamma,
                           "stages": [[s, a, b] for s, a, b in entries]})
            lines.extend(f"trace\t{idx}\t{f.gamma}\t{s}\t{a or '-'}\t{b or '-'}" for s, a, b in entries)
        payload["traces"] = traces
    if args.render_dir:
        from .plotting import partial_svg, save_figure
        from .trace import stage_count, truncate
        files = []
        for idx, f in enumerate(fillings, start=1):
            files.append(save_figure(render(f, "svg"), args.render_dir, f"{alpha}_{beta}_{idx}.svg"))
            if args.trace:
                for s in range(stage_count(f.n)):
                    files.append(save_figure(partial_svg(truncate(f, s)), args.render_dir,
                                             f"{alpha}_{beta}_{idx}_stage{s}.svg"))
        payload["files"] = files
        lines.extend(f"file\t{path}" for path in files)
    _emit(args, lines, payload)
    return 0


def cmd_mondrian(args):
    from .mondrian import init_product, play, trace_lines
    space = _space(args.space)
    k, n = _grassmannian(space)
    lam, mu = _partition(args.lam, space), _partition(args.mu, space)
    result = play(lam, mu, k, n)
    lines = [f"{format_partition(nu)}\t{c}" for nu, c in result.items()]
    payload = {"space": str(space), "lambda": format_partition(lam), "mu": format_partition(mu),
               "expansion": {format_partition(nu): c for nu, c in result.items()}}
    if args.trace:
        trace = trace_lines(lam, mu, k, n)
        lines = [f"node\t{line}" for line in trace] + lines
        payload["trace"] = trace
    if args.render_dir:
        from .plotting import mondrian_tree_svgs
        files = mondrian_tree_svgs(lam, mu, k, n, args.render_dir)
        payload["files"] = files
        lines.extend(f"file\t{path}" for path in files)
    if init_product(lam, mu, k, n) is None and not args.json:
        lines.insert(0, "# empty: the must-meet rule fails")
    _emit(args, lines, payload)
    return 0


def cmd_quantum(args):
    from .quantum import gw_invariant, quantum_product, vanishing_predicate
    space = _space(args.space)
    k, n = _grassmannian(space)
    parts = [_partition(c, space) for c in args.classes]
    if args.vanishing:
        if args.degree is None:
            raise UsageError("--vanishing needs -d")
        value = vanishing_predicate(parts, k, n, args.degree)
        _emit(args, ["true" if value else "false"], {"space": str(space), "d": args.degree, "vanishes": value})
        return 0
    if len(parts) == 3:
        if args.degree is None:
            raise UsageError("-d is required for a Gromov-Witten invariant")
        value = gw_invariant(*parts, k, n, args.degree)
        _emit(args, [str(value)], {"space": str(space), "d": args.degree,
                                   "classes": [format_partition(p) for p in parts], "invariant": value})
        return 0
    if len(parts) != 2:
        raise UsageError("quantum takes two classes (product) or three (invariant)")
    expansion = quantum_product(*parts, k, n)
    if args.degree is not None:
        expansion = type(expansion)({key: c for key, c in expansion.items() if key[0] == args.degree})
    _emit(args, expansion.lines(), {"space": str(space), "product": [
        {"d": d, "partition": format_partition(nu), "coefficient": c} for (d, nu), c in expansion.items()]})
    return 0


def _oracle_expansion(name, a, b, space):
    """Expansion keyed by digit strings from one of the classical oracles."""
    from .core import FlagString
    from .oracle import flag_structure_constants, giambelli_product, lr_expand
    if name == "flag":
        return flag_structure_constants(FlagString(space.n, space.steps, a), FlagString(space.n, space.steps, b))
    k, n = _grassmannian(space, "--name " + name)
    lam, mu = string_to_partition(a).lam, string_to_partition(b).lam
    if name == "lr":
        out = lr_expand(lam, mu, k, n)
    elif name == "giambelli":
        out = giambelli_product(lam, mu, k, n)
    elif name == "mondrian":
        from .mondrian import play
        out = play(lam, mu, k, n)
    else:
        raise UsageError(f"unknown oracle {name!r}")
    return {SchubertIndex(k, n, nu).string: c for nu, c in sorted(out.items())}


ORACLES = ("lr", "giambelli", "flag", "mondrian")


def cmd_oracle(args):
    space = _space(args.space)
    if args.name == "pieri":
        from .oracle import pieri_multiply
        k, n = _grassmannian(space)
        if len(args.alpha) == n and set(args.alpha) <= {"0", "1"}:
            lam = string_to_partition(_class(args.alpha, space)).lam
            if any(lam[1:]):
                raise UsageError(f"pieri: {args.alpha} is not a special class")
            p = lam[0] if lam else 0
        else:
            try:
                p = int(args.alpha)
            except ValueError:
                raise UsageError("pieri: the first argument is p or a special class string") from None
        mu = _partition(args.beta, space)
        out = {SchubertIndex(k, n, nu).string: c for nu, c in sorted(pieri_multiply(p, mu, k, n).items())}
    else:
        out = _oracle_expansion(args.name, _class(args.alpha, space), _class(args.beta, space), space)
    out = dict(sorted(out.items()))
    _emit(args, [f"{g}\t{c}" for g, c in out.items()], {"space": str(space), "oracle": args.name,
                                                        "expansion": out})
    return 0


def _leading(expansion, a, b):
    """Cohomological part of a K-theory or equivariant expansion."""
    target = string_codim(a) + string_codim(b)
    out = {}
    for g, c in expansion.items():
        c = specialize_to_ordinary(c)
        if c and string_codim(g) == target:
            out[g] = c
    return out


def _method(name, space):
    if name in ORACLES:
        if name != "flag":
            _grassmannian(space, f"--methods {name}")
        return lambda a, b: _oracle_expansion(name, a, b, space)
    theory = _theory(name, space)
    pieces = pieces_for(theory)
    return lambda a, b: _leading(expand_product(a, b, pieces), a, b)


def cmd_crosscheck(args):
    space = _space(args.space)
    names = [m.strip() for m in args.methods.split(",") if m.strip()]
    if len(names) < 2:
        raise UsageError("--methods needs at least two methods")
    methods = [(name, _method(name, space)) for name in names]
    classes = space.classes()
    count = 0
    for a in classes:
        for b in classes:
            results = [(name, fn(a, b)) for name, fn in methods]
            base_name, base = results[0]
            for name, res in results[1:]:
                if res != base:
                    dump = (f"MISMATCH\t{a}\t{b}\n{base_name}\t{json.dumps(base, sort_keys=True)}\n"
                            f"{name}\t{json.dumps(res, sort_keys=True)}")
                    raise CrossCheckFailure(dump)
            count += 1
    _emit(args, [f"OK {count} products"], {"space": str(space), "methods": names, "ok": True, "products": count})
    return 0


def _strict_parts(text):
    if text is None or text.strip() in ("", "-"):
        return ()
    return tuple(int(x) for x in text.split(",") if x.strip())


def cmd_og(args):
    from .og import associated_partition, discrepancy, og_codim, typeB_from_typeC
    if args.op == "b-from-c":
        missing = [flag for flag, v in (("--c", args.c), ("--su", args.su), ("--sv", args.sv), ("--sw", args.sw))
                   if v is None]
        if missing:
            raise UsageError(f"og b-from-c needs {' '.join(missing)}")
        value = typeB_from_typeC(args.c, args.su, args.sv, args.sw)
        _emit(args, [str(value)], {"b": str(value)})
        return 0
    if args.m is None:
        raise UsageError(f"og {args.op} needs --m")
    lam = _strict_parts(args.lam)
    if args.op == "associated":
        out = associated_partition(lam, args.m)
        _emit(args, [",".join(map(str, out))], {"associated": list(out)})
        return 0
    if args.k is None:
        raise UsageError(f"og {args.op} needs --k")
    mu = _strict_parts(args.mu)
    fn = discrepancy if args.op == "discrepancy" else og_codim
    value = fn(lam, mu, args.k, args.m)
    label = ",".join(map(str, lam)) + "|" + ",".join(map(str, mu))
    _emit(args, [f"{label}\t{value}"], {"class": label, args.op: value})
    return 0


# -- parser -------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="lrpuzzles", description="Exact Schubert calculus: puzzles, Mondrian tableaux, "
                "quantum products and classical oracles.", epilog=EPILOG,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit one JSON object instead of TSV")

    lr = sub.add_parser("lr", help="expand a product with puzzles")
    lr.add_argument("--space", required=True)
    lr.add_argument("--theory", help="puzzle theory (default: h, h2 or h3 by number of steps)")
    lr.add_argument("--gamma", help="print only this coefficient")
    lr.add_argument("--count-puzzles", action="store_true", help="add a column with the number of fillings")
    lr.add_argument("--render-dir", help="write <alpha>_<beta>_<index>.svg for every filling")
    lr.add_argument("--trace", action="store_true", help="print the degeneration trace of every filling")
    lr.add_argument("alpha")
    lr.add_argument("beta")
    common(lr)
    lr.set_defaults(func=cmd_lr)

    mo = sub.add_parser("mondrian", help="play the Grassmannian Mondrian game")
    mo.add_argument("--space", required=True)
    mo.add_argument("--trace", action="store_true", help="print every node of the game tree")
    mo.add_argument("--render-dir", help="write one SVG board per node")
    mo.add_argument("lam")
    mo.add_argument("mu")
    common(mo)
    mo.set_defaults(func=cmd_mondrian)

    qu = sub.add_parser("quantum", help="Gromov-Witten invariant (three classes) or quantum product (two)")
    qu.add_argument("--space", required=True)
    qu.add_argument("-d", "--degree", type=int)
    qu.add_argument("--vanishing", action="store_true", help="evaluate the m-point vanishing criterion")
    qu.add_argument("classes", nargs="+")
    common(qu)
    qu.set_defaults(func=cmd_quantum)

    orc = sub.add_parser("oracle", help="run a classical oracle")
    orc.add_argument("--space", required=True)
    orc.add_argument("--name", required=True, choices=ORACLES + ("pieri",))
    orc.add_argument("alpha", help="first class (for pieri: the integer p)")
    orc.add_argument("beta")
    common(orc)
    orc.set_defaults(func=cmd_oracle)

    cc = sub.add_parser("crosscheck", help="compare methods on every pair of classes")
    cc.add_argument("--space", required=True)
    cc.add_argument("--methods", required=True,
                    help="comma list of theories and oracles, e.g. h,lr,mondrian or h2,flag")
    common(cc)
    cc.set_defaults(func=cmd_crosscheck)

    og = sub.add_parser("og", help="orthogonal Grassmannian indexing")
    og.add_argument("op", choices=("associated", "discrepancy", "codim", "b-from-c"))
    og.add_argument("--k", type=int)
    og.add_argument("--m", type=int, help="OG(k, 2m+1)")
    og.add_argument("--lam", help="strictly decreasing parts, e.g. 6,4")
    og.add_argument("--mu", help="strictly decreasing parts (empty if omitted)")
    og.add_argument("--c", type=int, help="type C coefficient")
    og.add_argument("--su", type=int)
    og.add_argument("--sv", type=int)
    og.add_argument("--sw", type=int)
    common(og)
    og.set_defaults(func=cmd_og)
    return p


def main(argv=None):
    from .mondrian import MondrianError
    from .quantum import CrossCheckError
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrossCheckFailure as exc:
        print(str(exc))
        return 2
    except (CrossCheckError, MondrianError) as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 2
    except (UsageError, PuzzleInputError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"lrpuzzles {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
