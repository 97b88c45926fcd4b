"""Morphisms of free semigroups ``A⁺ → B⁺``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .words import Alphabet, AlphabetError, Word, WordSet, concat

#: default cap on the total number of symbols in a materialized composition
IMAGE_CAP = 10**6


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class Morphism:
    """``images[i]`` is the image of domain letter ``i`` (a nonempty word over
    the codomain).  Equality is structural."""

    domain: Alphabet
    codomain: Alphabet
    images: tuple

    def __post_init__(self):
        images = tuple(tuple(im) for im in self.images)
        if len(images) != len(self.domain):
            raise MorphismError(
                f"{len(images)} images for a domain of {len(self.domain)} letters")
        for a, im in enumerate(images):
            if not im:
                raise MorphismError(f"empty image for letter {self.domain.letters[a]!r}")
            self.codomain.check(im)
        object.__setattr__(self, "images", images)

    @classmethod
    def from_rules(cls, rules: Mapping[str, str], domain: Alphabet | None = None,
                   codomain: Alphabet | None = None) -> "Morphism":
        """Build from symbol rules, e.g. ``{"a": "ab", "b": "a"}``.

        Alphabets default to the rule keys in order; the codomain defaults to
        the domain.
        """
        if domain is None:
            domain = Alphabet(tuple(rules))
        if codomain is None:
            codomain = domain
        missing = [s for s in domain.letters if s not in rules]
        if missing:
            raise MorphismError(f"no rule for letters {missing}")
        extra = [s for s in rules if s not in domain.letters]
        if extra:
            raise MorphismError(f"rules for letters outside the domain: {extra}")
        return cls(domain, codomain,
                   tuple(codomain.word(rules[s]) for s in domain.letters))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Morphism":
        return cls(alphabet, alphabet, tuple((a,) for a in alphabet))

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def show(self) -> str:
        return "; ".join(f"{self.domain.letters[a]} -> {self.codomain.show(im)}"
                         for a, im in enumerate(self.images))

    @property
    def lengths(self) -> tuple:
        return tuple(len(im) for im in self.images)


def apply(tau: Morphism, w: Word) -> Word:
    n = len(tau.images)
    if w and (min(w) < 0 or max(w) >= n):
        bad = sorted({a for a in w if not 0 <= a < n})
        raise AlphabetError(f"letters {bad} outside the domain of the morphism")
    return concat(tau.images[a] for a in w)


def apply_two_sided(tau: Morphism, left: Word, right: Word) -> tuple:
    """Image of a two-sided window ``left . right`` whose seam is coordinate 0.

    Negative and nonnegative coordinates are substituted separately, so the
    seam of the output sits between the two returned words.
    """
    return apply(tau, left), apply(tau, right)


def compose(sigma: Morphism, tau: Morphism, cap: int = IMAGE_CAP) -> Morphism:
    """``sigma ∘ tau``: letter ``a`` maps to ``sigma(tau(a))``."""
    if tau.codomain != sigma.domain:
        raise AlphabetError("codomain of the inner morphism must be the domain of the outer one")
    lengths = [sum(len(sigma.images[b]) for b in im) for im in tau.images]
    if sum(lengths) > cap:
        raise MorphismError(
            f"composition would materialize {sum(lengths)} symbols (cap {cap})")
    return Morphism(tau.domain, sigma.codomain,
                    tuple(apply(sigma, im) for im in tau.images))


def is_primitive(tau: Morphism) -> bool:
    """Every codomain letter occurs in every image."""
    everything = set(tau.codomain)
    return all(everything <= set(im) for im in tau.images)


def min_image_length(tau: Morphism) -> int:
    return min(tau.lengths)


def max_image_length(tau: Morphism) -> int:
    return max(tau.lengths)


def image_set(tau: Morphism):
    """The set ``tau(A)`` as a :class:`~sadicwords.words.WordSet`."""
    return WordSet(tau.images)

