"""Batch front end.

Reports are line-oriented records.  A ``#`` header names the tool version,
the fixture hash, horizon and seed; every record line is ``key=value``
pairs (``--format kv``) or tab-separated values under a ``#`` column line
(``--format tsv``).  Exit codes: 0 all checks pass, 1 a bound is violated,
2 usage error.
"""
from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

from . import __version__
from .asymptotics import count_asymptotic_classes, level_wordset, verify_covering
from .automorphisms import (
    check_factorial_bound, enumerate_automorphism_candidates, quotient_census,
)
from .fixtures import chacon, fibonacci, random_primitive, thue_morse
from .grammar import FixtureError, parse_fixture, render_fixture
from .interp import double_interpretations, enumerate_interpretations, is_simple
from .reduction import build_B, reduction_chain, simple_double_interpretations
from .sadic import LanguageError, level_language
from .words import AlphabetError, WordError

BUILTINS = {
    "fibonacci": lambda seed: fibonacci(),
    "thue-morse": lambda seed: thue_morse(),
    "chacon": lambda seed: chacon(),
    "random": lambda seed: random_primitive(seed),
}


class UsageError(Exception):
    pass


class Report:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines = []
        self._columns = None

    def header(self, **fields):
        self.lines.append("# " + " ".join(f"{k}={v}" for k, v in fields.items()))

    def record(self, kind: str, **fields):
        fields = {"record": kind, **fields}
        if self.fmt == "kv":
            self.lines.append(" ".join(f"{k}={_fmt(v)}" for k, v in fields.items()))
            return
        cols = tuple(fields)
        if cols != self._columns:
            self.lines.append("#\t" + "\t".join(cols))
            self._columns = cols
        self.lines.append("\t".join(_fmt(v) for v in fields.values()))

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (tuple, list)):
        return ",".join(_fmt(x) for x in v) or "-"
    return str(v)


def _load(args):
    """The fixture as (sequence, name, sha256).  ``@name`` picks a builtin."""
    target = args.fixture
    if target.startswith("@"):
        key = target[1:]
        if key not in BUILTINS:
            raise UsageError(f"unknown builtin {key!r}; choose from {', '.join(BUILTINS)}")
        seq = BUILTINS[key](args.seed)
        text = render_fixture(seq)
        return seq, seq.name, hashlib.sha256(text.encode()).hexdigest()
    path = Path(target)
    if not path.is_file():
        raise UsageError(f"no such fixture file: {target}")
    spec = parse_fixture(path.read_text(), source=str(path), name=path.stem)
    return spec.sequence(), spec.name, spec.sha256


def _levels(text: str) -> list:
    a, sep, b = text.partition("..")
    try:
        return list(range(int(a), int(b) + 1)) if sep else [int(a)]
    except ValueError:
        raise UsageError(f"bad level range {text!r}; expected <a>..<b>") from None


def _word(seq, args):
    if args.word is None:
        raise UsageError("--word is required")
    return seq.alphabet(0).word(args.word)


def _wordset(seq, args):
    if args.words:
        return seq.alphabet(0).wordset(args.words), "explicit"
    if args.level < 1:
        raise UsageError("--level must be at least 1")
    return level_wordset(seq, args.level), f"level-{args.level}"


# -- commands ------------------------------------------------------------------------------

def cmd_lang(seq, args, rep):
    lang = level_language(seq, args.level, args.depth)
    A = seq.alphabet(args.level)
    rep.record("lang", level=args.level, cap=args.depth, stable_at=lang.horizon)
    for k, count in enumerate(lang.complexity(), 1):
        rep.record("complexity", length=k, count=count)
    if args.list:
        for w in sorted(lang.words(args.depth)):
            rep.record("word", length=args.depth, word=A.show(w))
    return 0


def cmd_interp(seq, args, rep):
    d = _word(seq, args)
    W, origin = _wordset(seq, args)
    A = seq.alphabet(0)
    interps = enumerate_interpretations(d, W)
    rep.record("interp", word=A.show(d), W=[A.show(w) for w in W], source=origin,
               count=len(interps))
    for I in interps:
        rep.record("interpretation", d_L=A.show(I.d_L), d_M=[A.show(b) for b in I.blocks],
                   d_R=A.show(I.d_R), a=A.letters[I.a], u_L=A.show(I.u_L), u_R=A.show(I.u_R))
    return 0


def cmd_di(seq, args, rep):
    d = _word(seq, args)
    W, origin = _wordset(seq, args)
    A = seq.alphabet(0)
    pairs = double_interpretations(d, W)
    simple = [D for D in pairs if is_simple(D, W)]
    rep.record("di", word=A.show(d), W=[A.show(w) for w in W], source=origin,
               count=len(pairs), simple=len(simple))
    for D in pairs:
        rep.record("pair", simple=is_simple(D, W), first=D.first.show(A), second=D.second.show(A))
    return 0


def cmd_reduce(seq, args, rep):
    d = _word(seq, args)
    W, origin = _wordset(seq, args)
    A = seq.alphabet(0)
    simple = simple_double_interpretations(d, W)
    rep.record("reduce", word=A.show(d), W=[A.show(w) for w in W], source=origin,
               simple=len(simple))
    for i, D in enumerate(simple):
        chain = reduction_chain(D, W)
        rep.record("chain", index=i, steps=len(chain) - 1,
                   words=[A.show(E.word) for E in chain], end=chain[-1].show(A))
    return 0


def cmd_bounds(seq, args, rep):
    W, origin = _wordset(seq, args)
    A = seq.alphabet(0)
    report = build_B(W, args.len_cap, args.exact)
    per_bucket = 61 * len(W)
    for U, res in sorted(report.results.items()):
        rep.record("bucket", profile=[A.show(u) for u in U[:5]] + [str(U[5])],
                   size=res.size, mode=res.mode, dropped=res.dropped, bound=per_bucket,
                   ok=res.size <= per_bucket)
    rep.record("strata", lengths=list(report.strata), counts=list(report.strata.values()))
    rep.record("bounds", W=[A.show(w) for w in W], source=origin, len_cap=args.len_cap,
               buckets=report.bucket_count, simple=report.simple_count,
               max_bucket=report.max_bucket_size, bucket_bound=per_bucket,
               B=sorted(A.show(w) for w in report.B), B_size=len(report.B),
               B_bound=report.bound, verified_up_to=args.len_cap, ok=report.within_bounds)
    return 0 if report.within_bounds else 1


def cmd_asym(seq, args, rep):
    L = args.depth
    depths = sorted({max(1, L // 4), max(1, L // 2), L})
    r = count_asymptotic_classes(seq, depths)
    rep.record("asym", depths=list(r.depths), counts=list(r.counts), lookahead=r.lookahead,
               right_special=r.right_special_count, stabilized=r.stabilized,
               estimate=r.class_count_estimate, rank=r.rank, bound=r.bound,
               ok=r.within_bound, verified_at_depth=r.depth)
    return 0 if r.within_bound else 1


def cmd_aut(seq, args, rep):
    r = args.radius
    lang = level_language(seq, 0, max(2 * r + 1 + args.depth, 6 * r + 1))
    candidates = enumerate_automorphism_candidates(lang, r, args.depth)
    census = quotient_census(candidates, lang)
    asym = count_asymptotic_classes(seq, (32, 64, 128))
    rep.record("aut", radius=r, depth=args.depth, candidates=len(candidates),
               census=census.classes, status="verified-to-depth")
    if not asym.stabilized:
        rep.record("factorial", stabilized=False, census=census.classes,
                   estimate=asym.class_count_estimate)
        return 0
    check = check_factorial_bound(census.classes, asym)
    rep.record("factorial", stabilized=True, census=check.census, estimate=check.estimate,
               factorial=check.factorial, ok=check.holds)
    return 0 if check.holds else 1


def cmd_verify(seq, args, rep):
    levels = _levels(args.levels)
    report = verify_covering(seq, levels, args.depth, args.len_cap, args.exact)
    for c in report.levels:
        rep.record("level", level=c.level, W_size=c.size, min_length=c.min_length,
                   max_length=c.max_length, len_cap=c.len_cap, B_size=c.B_size, B_bound=c.bound,
                   pairs=c.pairs, covered=c.covered, extracted=c.extracted,
                   longest_free=c.longest_free, failures=len(c.failures), ok=c.passed)
    rep.record("verify", depth=report.depth, levels=levels, ok=report.passed)
    return 0 if report.passed else 1


COMMANDS = {
    "lang": (cmd_lang, "level language dump"),
    "interp": (cmd_interp, "interpretations of a word"),
    "di": (cmd_di, "double interpretations and simplicity"),
    "reduce": (cmd_reduce, "reduction chains of the simple double interpretations of a word"),
    "bounds": (cmd_bounds, "irreducible subsets per bucket and the set B"),
    "asym": (cmd_asym, "asymptotic class estimate"),
    "aut": (cmd_aut, "automorphism candidates and the factorial bound"),
    "verify": (cmd_verify, "covering check for B across levels"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sadicwords", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"sadicwords {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("fixture", help="fixture file, or @fibonacci / @thue-morse / @chacon / @random")
        p.add_argument("--depth", type=int, default={"lang": 8, "asym": 128, "aut": 16}.get(name, 64))
        p.add_argument("--levels", default="2..6")
        p.add_argument("--level", type=int, default={"lang": 0}.get(name, 1))
        p.add_argument("--len-cap", type=int, default=None if name == "verify" else 10)
        p.add_argument("--radius", type=int, default=2)
        p.add_argument("--seed", type=int, default=11)
        p.add_argument("--word")
        p.add_argument("--words", help="explicit word set, e.g. 'ab a'")
        p.add_argument("--list", action="store_true", help="list the words at the cap")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--exact", dest="exact", action="store_true", default=None)
        mode.add_argument("--greedy", dest="exact", action="store_false")
        p.add_argument("--format", choices=("kv", "tsv"), default="kv")
    return parser


def run(argv=None) -> tuple:
    """``(report text, exit code)``; errors go to the text with code 2."""
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.format)
    try:
        seq, name, digest = _load(args)
        rep.header(tool=f"sadicwords-{__version__}", command=args.command)
        rep.header(fixture=name, sha256=digest, horizon=seq.horizon, seed=args.seed)
        code = COMMANDS[args.command][0](seq, args, rep)
    except FixtureError as err:
        return str(err) + "\n", 2
    except AssertionError as err:
        # a bound checked inside the library failed
        rep.record("violation", message=str(err).replace(" ", "_"))
        return rep.text(), 1
    except (UsageError, LanguageError, AlphabetError, WordError, ValueError, IndexError) as err:
        return f"error: {err}\n", 2
    return rep.text(), code


def main(argv=None) -> int:
    text, code = run(argv)
    (sys.stdout if code != 2 else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
