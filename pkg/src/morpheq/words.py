"""Words, morphisms, codings, and lazily expanded morphic sequences.

Symbols are plain ints 0..n-1 and words are tuples of symbols.  A morphism
maps each symbol to a non-empty word over the same alphabet; a coding maps
each symbol to a single symbol of a target alphabet.  A morphism f that is
prolongable at a (f(a) starts with a and is longer than one symbol) has a
unique infinite fixed point f^oo(a), exposed here as FixedPoint: a buffer
that grows by applying f to the part of the sequence already known.
"""

from __future__ import annotations

from dataclasses import dataclass

Word = tuple[int, ...]


class AlphabetError(ValueError):
    """A symbol lies outside the alphabet an operation expects."""


class NotProlongableError(ValueError):
    """The morphism has no infinite fixed point at the requested symbol."""


def word(symbols) -> Word:
    return tuple(symbols)


def parse_word(text: str) -> Word:
    """Turn a digit string like '0210' into a word."""
    if not isinstance(text, str) or not all(c.isdigit() for c in text):
        raise ValueError(f"not a digit string: {text!r}")
    return tuple(int(c) for c in text)


def format_word(w: Word) -> str:
    """Render a word as a digit string; requires symbols below 10."""
    if any(s > 9 for s in w):
        raise ValueError("word has symbols beyond digit range")
    return "".join(str(s) for s in w)


@dataclass(frozen=True)
class Morphism:
    """Map from symbols to non-empty words, extended to words pointwise."""

    images: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(im) for im in self.images))
        n = len(self.images)
        if n == 0:
            raise ValueError("morphism needs at least one symbol")
        for a, im in enumerate(self.images):
            if len(im) == 0:
                raise ValueError(f"image of {a} is empty")
            for s in im:
                if not 0 <= s < n:
                    raise AlphabetError(f"image of {a} uses symbol {s} outside 0..{n - 1}")

    @classmethod
    def from_strings(cls, *images: str) -> Morphism:
        return cls(tuple(parse_word(im) for im in images))

    @property
    def alphabet_size(self) -> int:
        return len(self.images)

    def apply(self, w: Word) -> Word:
        out: list[int] = []
        for s in w:
            if not 0 <= s < len(self.images):
                raise AlphabetError(f"symbol {s} outside alphabet of size {len(self.images)}")
            out.extend(self.images[s])
        return tuple(out)

    def power(self, k: int) -> Morphism:
        """The k-fold composition, computed image by image."""
        if k < 1:
            raise ValueError("exponent must be at least 1")
        images = self.images
        for _ in range(k - 1):
            images = tuple(self.apply(im) for im in images)
        return Morphism(images)

    def __pow__(self, k: int) -> Morphism:
        return self.power(k)

    def is_prolongable(self, a: int) -> bool:
        if not 0 <= a < len(self.images):
            raise AlphabetError(f"symbol {a} outside alphabet")
        im = self.images[a]
        return im[0] == a and len(im) >= 2

    def image_lengths(self) -> tuple[int, ...]:
        return tuple(len(im) for im in self.images)


@dataclass(frozen=True)
class Coding:
    """Symbol-to-symbol map into a target alphabet, extended pointwise."""

    table: tuple[int, ...]
    target_size: int

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) == 0:
            raise ValueError("coding needs at least one symbol")
        if self.target_size < 1:
            raise ValueError("target alphabet must be non-empty")
        for a, s in enumerate(self.table):
            if not 0 <= s < self.target_size:
                raise AlphabetError(f"coding of {a} is {s}, outside target 0..{self.target_size - 1}")

    @classmethod
    def identity(cls, n: int) -> Coding:
        return cls(tuple(range(n)), n)

    @classmethod
    def from_string(cls, text: str, target_size: int | None = None) -> Coding:
        table = parse_word(text)
        if target_size is None:
            target_size = max(table) + 1
        return cls(table, target_size)

    @property
    def source_size(self) -> int:
        return len(self.table)

    def apply(self, w: Word) -> Word:
        table = self.table
        n = len(table)
        for s in w:
            if not 0 <= s < n:
                raise AlphabetError(f"symbol {s} outside alphabet of size {n}")
        return tuple(table[s] for s in w)


class FixedPoint:
    """Prefix of the infinite fixed point f^oo(a), extended on demand.

    The buffer is grown by the standard trick: the fixed point equals
    f(s_0) f(s_1) f(s_2) ... over its own symbols s_i, so appending the
    image of the next not-yet-consumed buffer symbol extends the known
    prefix.  Prolongability guarantees the consumer never catches up.
    """

    def __init__(self, morphism: Morphism, start: int = 0):
        if not morphism.is_prolongable(start):
            raise NotProlongableError(
                f"image of {start} must start with {start} and have length >= 2"
            )
        self.morphism = morphism
        self.start = start
        self._buf: list[int] = list(morphism.images[start])
        self._next = 1

    def __len__(self) -> int:
        return len(self._buf)

    def extend_to(self, n: int) -> None:
        buf = self._buf
        images = self.morphism.images
        while len(buf) < n:
            buf.extend(images[buf[self._next]])
            self._next += 1

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        self.extend_to(n)
        return tuple(self._buf[:n])

    def at(self, i: int) -> int:
        if i < 0:
            raise ValueError("position must be non-negative")
        self.extend_to(i + 1)
        return self._buf[i]

    def factor(self, k: int, m: int) -> Word:
        """The factor at positions k..m-1 of the fixed point."""
        if not 0 <= k <= m:
            raise ValueError(f"invalid range [{k}, {m})")
        self.extend_to(m)
        return tuple(self._buf[k:m])


@dataclass(frozen=True)
class MorphicRep:
    """A coded morphic sequence: coding applied to the fixed point of a morphism."""

    morphism: Morphism
    coding: Coding
    start: int = 0

    def __post_init__(self):
        if self.coding.source_size != self.morphism.alphabet_size:
            raise AlphabetError(
                f"coding covers {self.coding.source_size} symbols, "
                f"morphism has {self.morphism.alphabet_size}"
            )
        if not self.morphism.is_prolongable(self.start):
            raise NotProlongableError(
                f"image of {self.start} must start with {self.start} and have length >= 2"
            )

    @classmethod
    def pure(cls, morphism: Morphism, start: int = 0) -> MorphicRep:
        return cls(morphism, Coding.identity(morphism.alphabet_size), start)

    def fixed_point(self) -> FixedPoint:
        return FixedPoint(self.morphism, self.start)

    def prefix(self, n: int) -> Word:
        """First n symbols of the coded sequence."""
        return self.coding.apply(self.fixed_point().prefix(n))


def apply_morphism(f: Morphism, w: Word) -> Word:
    return f.apply(w)


def morphism_power(f: Morphism, k: int) -> Morphism:
    return f.power(k)


def apply_coding(c: Coding, w: Word) -> Word:
    return c.apply(w)


def fixed_point_prefix(f: Morphism, a: int, n: int) -> Word:
    return FixedPoint(f, a).prefix(n)


def prune_unreachable(f: Morphism, coding: Coding, a: int) -> tuple[Morphism, Coding, int]:
    """Restrict f and its coding to the symbols reachable from a.

    Reachable means: occurring in some f^k(a), k >= 0.  Kept symbols are
    renumbered in increasing order of their old indices, so pruning a
    morphism whose symbols are all reachable is the identity.
    """
    if coding.source_size != f.alphabet_size:
        raise AlphabetError("coding and morphism disagree on alphabet size")
    if not 0 <= a < f.alphabet_size:
        raise AlphabetError(f"symbol {a} outside alphabet")
    reachable = {a}
    frontier = [a]
    while frontier:
        b = frontier.pop()
        for s in f.images[b]:
            if s not in reachable:
                reachable.add(s)
                frontier.append(s)
    kept = sorted(reachable)
    rename = {old: new for new, old in enumerate(kept)}
    images = tuple(tuple(rename[s] for s in f.images[old]) for old in kept)
    table = tuple(coding.table[old] for old in kept)
    return Morphism(images), Coding(table, coding.target_size), rename[a]


def factor(s: FixedPoint, k: int, m: int) -> Word:
    return s.factor(k, m)
