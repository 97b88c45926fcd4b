"""Standard directive sequences used in tests, demos and the acceptance suite."""
from __future__ import annotations

import numpy as np

from .morphism import Morphism, is_primitive
from .sadic import DirectiveSequence
from .words import Alphabet

AB = Alphabet.of("ab")

#: seeds of the randomized primitive substitutions in the acceptance suite
RANDOM_SEEDS = (11, 23, 37, 41, 59)


def fibonacci_morphism() -> Morphism:
    return Morphism.from_rules({"a": "ab", "b": "a"})


def thue_morse_morphism() -> Morphism:
    return Morphism.from_rules({"a": "ab", "b": "ba"})


def fibonacci(horizon: int = 24) -> DirectiveSequence:
    return DirectiveSequence.stationary(fibonacci_morphism(), horizon, "fibonacci")


def thue_morse(horizon: int = 24) -> DirectiveSequence:
    return DirectiveSequence.stationary(thue_morse_morphism(), horizon, "thue-morse")


def chacon(horizon: int = 16) -> DirectiveSequence:
    """Primitive three-letter presentation of the Chacon subshift
    (0 -> 0012, 1 -> 12, 2 -> 012); the classical a -> aaba, b -> b is not
    everywhere growing."""
    tau = Morphism.from_rules({"0": "0012", "1": "12", "2": "012"})
    return DirectiveSequence.stationary(tau, horizon, "chacon")


def letter_to_letter(horizon: int = 8) -> DirectiveSequence:
    """A non-growing schedule (the letter swap)."""
    return DirectiveSequence.stationary(Morphism.from_rules({"a": "b", "b": "a"}),
                                        horizon, "swap")


def random_primitive(seed: int, max_letters: int = 3, max_image: int = 4,
                     horizon: int = 24) -> DirectiveSequence:
    """A stationary sequence over 2 or 3 letters whose substitution is
    primitive (every letter in every image).  Fully determined by ``seed``."""
    rng = np.random.default_rng(seed)
    size = int(rng.integers(2, max_letters + 1))
    alphabet = Alphabet(tuple("abc"[:size]))
    while True:
        images = []
        for _ in range(size):
            length = int(rng.integers(size, max_image + 1))
            images.append(tuple(int(c) for c in rng.integers(0, size, length)))
        tau = Morphism(alphabet, alphabet, tuple(images))
        if is_primitive(tau):
            return DirectiveSequence.stationary(tau, horizon, f"random-{seed}")
