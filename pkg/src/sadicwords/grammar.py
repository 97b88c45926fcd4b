"""Fixture files describing directive sequences.

One statement per line, ``#`` starts a comment::

    alphabet a b
    morphism fib { a -> a b ; b -> a }
    schedule repeat(fib)
    horizon 16

Extensions: named alphabets (``alphabet X: a b``), morphisms between them
(``morphism f X -> Y { ... }``), a finite prefix before the loop
(``schedule f, g repeat(h)``), a finite schedule (``schedule f, g``) and
``name <text>``.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field

from .morphism import Morphism, MorphismError
from .sadic import DirectiveSequence
from .words import Alphabet, AlphabetError

DEFAULT = ""  # key of the unnamed alphabet

_NAME = r"[A-Za-z_][\w\-]*"


class FixtureError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<fixture>"):
        self.message, self.line, self.column, self.source = message, line, column, source
        super().__init__(f"{source}:{line}:{column}: {message}")


@dataclass
class FixtureSpec:
    name: str
    alphabets: dict
    morphisms: dict
    prefix: tuple
    period: tuple
    horizon: int
    sha256: str = ""
    text: str = field(default="", repr=False)

    def sequence(self) -> DirectiveSequence:
        return DirectiveSequence(tuple(self.morphisms[m] for m in self.prefix),
                                 tuple(self.morphisms[m] for m in self.period),
                                 self.horizon, self.name)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def parse_fixture(text: str, source: str = "<fixture>", name: str = "") -> FixtureSpec:
    alphabets, morphisms = {}, {}
    schedule = None
    horizon = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        keyword, _, rest = body.partition(" ")
        rest_col = col + len(keyword) + 1 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()

        def fail(msg, at=rest_col):
            raise FixtureError(msg, lineno, at, source)

        if keyword == "alphabet":
            key, letters = DEFAULT, rest
            m = re.match(rf"({_NAME})\s*:\s*(.*)$", rest)
            if m:
                key, letters = m.group(1), m.group(2)
            if key in alphabets:
                fail(f"alphabet {key or '(default)'} declared twice")
            if not letters.split():
                fail("an alphabet needs at least one letter")
            try:
                alphabets[key] = Alphabet(tuple(letters.split()))
            except AlphabetError as err:
                fail(str(err))
        elif keyword == "morphism":
            m = re.match(rf"({_NAME})\s*(?:({_NAME})\s*->\s*({_NAME})\s*)?\{{(.*)\}}\s*$", rest)
            if not m:
                fail("expected: morphism <name> [<X> -> <Y>] { <letter> -> <letters> ; ... }")
            mname, dom, cod, rules_text = m.groups()
            if mname in morphisms:
                fail(f"morphism {mname} defined twice")
            dom, cod = dom or DEFAULT, cod or DEFAULT
            for a in (dom, cod):
                if a not in alphabets:
                    fail(f"undefined alphabet {a or '(default)'}")
            rules = {}
            offset = rest_col + m.start(4)
            for part in rules_text.split(";"):
                at = offset
                offset += len(part) + 1
                if not part.strip():
                    continue
                lhs, arrow, rhs = part.partition("->")
                at += len(part) - len(part.lstrip())
                if not arrow:
                    fail(f"expected '<letter> -> <letters>' in {part.strip()!r}", at)
                letter = lhs.strip()
                if letter in rules:
                    fail(f"two rules for letter {letter!r}", at)
                if not rhs.split():
                    fail(f"empty image for letter {letter!r}", at)
                rules[letter] = rhs.strip()
            try:
                morphisms[mname] = Morphism.from_rules(rules, alphabets[dom], alphabets[cod])
            except (MorphismError, AlphabetError) as err:
                fail(str(err))
        elif keyword == "schedule":
            m = re.match(r"^(.*?)\s*(?:repeat\((.*)\))?\s*$", rest)
            head, loop = m.group(1), m.group(2)
            prefix = [s.strip() for s in head.split(",") if s.strip()]
            period = [s.strip() for s in (loop or "").split(",") if s.strip()]
            if loop is not None and not period:
                fail("repeat() needs at least one morphism")
            if not prefix and not period:
                fail("empty schedule")
            for ref in prefix + period:
                if ref not in morphisms:
                    fail(f"undefined morphism {ref}", rest_col + rest.find(ref))
            if schedule is not None:
                fail("schedule given twice")
            schedule = (tuple(prefix), tuple(period), lineno)
        elif keyword == "horizon":
            if not re.fullmatch(r"\d+", rest) or int(rest) < 1:
                fail(f"horizon must be a positive integer, got {rest!r}")
            horizon = int(rest)
        elif keyword == "name":
            name = rest
        else:
            fail(f"unknown statement {keyword!r}", col)
    if not alphabets:
        raise FixtureError("no alphabet declared", 1, 1, source)
    if schedule is None:
        raise FixtureError("no schedule given", 1, 1, source)
    prefix, period, sched_line = schedule
    spec = FixtureSpec(name or "fixture", alphabets, morphisms, prefix, period,
                       horizon if horizon is not None else 32,
                       hashlib.sha256(text.encode()).hexdigest(), text)
    try:
        spec.sequence()
    except (AlphabetError, ValueError) as err:
        raise FixtureError(f"alphabet chain mismatch: {err}", sched_line, 1, source) from None
    return spec


def render_fixture(seq: DirectiveSequence) -> str:
    """Fixture text for a sequence whose morphisms share one alphabet."""
    morphisms = list(dict.fromkeys(seq.prefix + seq.period))
    alphabet = morphisms[0].domain
    if any(m.domain != alphabet or m.codomain != alphabet for m in morphisms):
        raise ValueError("render_fixture handles single-alphabet schedules only")
    names = {m: f"m{i}" for i, m in enumerate(morphisms)}
    lines = [f"name {seq.name}" if seq.name else "", "alphabet " + " ".join(alphabet.letters)]
    for m in morphisms:
        rules = " ; ".join(f"{alphabet.letters[a]} -> {' '.join(alphabet.letters[c] for c in im)}"
                           for a, im in enumerate(m.images))
        lines.append(f"morphism {names[m]} {{ {rules} }}")
    head = ", ".join(names[m] for m in seq.prefix)
    loop = f"repeat({', '.join(names[m] for m in seq.period)})" if seq.period else ""
    lines.append("schedule " + " ".join(x for x in (head, loop) if x))
    lines.append(f"horizon {seq.horizon}")
    return "\n".join(x for x in lines if x) + "\n"
