"""Exhaustive search for small coded morphic representations of a target word.

A candidate is a morphism f prolongable at 0 (f(0) starts with 0 and has at
least two symbols, all images between one and max_image_len symbols) plus a
coding, such that the coded fixed point reproduces the first prefix_len
symbols of the target.  The search walks a tree of partial assignments:

  * the fixed-point buffer is grown by consuming its own symbols in order;
  * hitting a symbol without an image branches over all candidate images;
  * every buffered position below prefix_len is matched against the target
    immediately, which forces the coding of each symbol at its first
    occurrence and abandons the branch at the first mismatch;
  * new symbols may only be introduced in increasing order, so each result
    is the canonical member of its renaming class.

A result is reported only when every image was consumed while deriving the
prefix, i.e. when the match leaves no free choice open.  Results come back
sorted by complexity (total image length), then by image list, then coding.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

from .words import Coding, FixedPoint, Morphism, Word

MAX_ALPHABET = 6
MAX_IMAGE_LEN = 3


class SearchTooLargeError(ValueError):
    """The requested search exceeds the supported parameter guards."""


@dataclass(frozen=True)
class SearchSpec:
    target: Word
    alphabet_size: int
    max_image_len: int
    prefix_len: int
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "target", tuple(self.target))
        if self.alphabet_size < 1 or self.max_image_len < 1:
            raise ValueError("alphabet size and image length must be positive")
        if self.alphabet_size > MAX_ALPHABET:
            raise SearchTooLargeError(
                f"alphabet size {self.alphabet_size} exceeds the guard {MAX_ALPHABET}"
            )
        if self.max_image_len > MAX_IMAGE_LEN:
            raise SearchTooLargeError(
                f"image length {self.max_image_len} exceeds the guard {MAX_IMAGE_LEN}"
            )
        if self.prefix_len < 1:
            raise ValueError("prefix length must be positive")
        if self.prefix_len > len(self.target):
            raise ValueError("target word is shorter than the requested prefix")
        if self.jobs < 1:
            raise ValueError("job count must be positive")


@dataclass(frozen=True)
class FoundRep:
    morphism: Morphism
    coding: Coding
    complexity: int


def complexity(f: Morphism) -> int:
    """Total image length, the size measure results are ranked by."""
    return sum(len(im) for im in f.images)


def _candidate_images(max_seen: int, n: int, max_len: int) -> list[Word]:
    """All images over the current alphabet, shortest first then lexicographic.

    Symbols up to max_seen are free; larger ones must enter in increasing
    order, each exactly one above the running maximum.
    """
    out: list[Word] = []
    level: list[tuple[Word, int]] = [((), max_seen)]
    for _ in range(max_len):
        nxt: list[tuple[Word, int]] = []
        for prefix, m in level:
            for x in range(min(m + 1, n - 1) + 1):
                grown = prefix + (x,)
                nxt.append((grown, max(m, x)))
        out.extend(w for w, _ in nxt)
        level = nxt
    return out


def _root_images(n: int, max_len: int) -> list[Word]:
    """Candidate images of 0: start with 0, at least two symbols."""
    return [(0,) + w for w in _candidate_images(0, n, max_len - 1)]


class _Searcher:
    def __init__(self, target: Word, n: int, max_len: int, prefix_len: int):
        self.target = target
        self.n = n
        self.max_len = max_len
        self.N = prefix_len
        self.images: list[Word | None] = [None] * n
        self.coding: list[int | None] = [None] * n
        self.buf: list[int] = []
        self.ptr = 0
        self.checked = 0
        self.max_seen = 0
        self.trail: list[int] = []
        self.results: list[tuple[tuple[Word, ...], tuple[int, ...]]] = []
        self._cands: dict[int, list[Word]] = {}

    def run_from_root(self, root: Word) -> None:
        self.images[0] = root
        self.buf = list(root)
        self.ptr = 1
        self.checked = 0
        self.max_seen = max(root)
        self._advance()
        self.images[0] = None
        self.buf.clear()
        self.trail.clear()
        for s in range(self.n):
            self.coding[s] = None

    def _candidates(self, max_seen: int) -> list[Word]:
        cached = self._cands.get(max_seen)
        if cached is None:
            cached = _candidate_images(max_seen, self.n, self.max_len)
            self._cands[max_seen] = cached
        return cached

    def _advance(self) -> None:
        buf = self.buf
        coding = self.coding
        target = self.target
        N = self.N
        while True:
            checked = self.checked
            limit = len(buf) if len(buf) < N else N
            while checked < limit:
                s = buf[checked]
                c = coding[s]
                if c is None:
                    coding[s] = target[checked]
                    self.trail.append(s)
                elif c != target[checked]:
                    self.checked = checked
                    return
                checked += 1
            self.checked = checked
            if len(buf) >= N:
                if None not in self.images:
                    self.results.append(
                        (tuple(self.images), tuple(coding))  # type: ignore[arg-type]
                    )
                return
            s = buf[self.ptr]
            im = self.images[s]
            if im is not None:
                buf.extend(im)
                self.ptr += 1
                continue
            saved_buf = len(buf)
            saved_ptr = self.ptr
            saved_checked = self.checked
            saved_seen = self.max_seen
            saved_trail = len(self.trail)
            for cand in self._candidates(self.max_seen):
                self.images[s] = cand
                buf.extend(cand)
                self.ptr += 1
                for x in cand:
                    if x > self.max_seen:
                        self.max_seen = x
                self._advance()
                del buf[saved_buf:]
                self.ptr = saved_ptr
                self.checked = saved_checked
                self.max_seen = saved_seen
                for symbol in self.trail[saved_trail:]:
                    coding[symbol] = None
                del self.trail[saved_trail:]
            self.images[s] = None
            return


def _search_root(args: tuple[Word, int, int, int, Word]) -> list[tuple[tuple[Word, ...], tuple[int, ...]]]:
    target, n, max_len, prefix_len, root = args
    searcher = _Searcher(target, n, max_len, prefix_len)
    searcher.run_from_root(root)
    return searcher.results


def search(spec: SearchSpec) -> list[FoundRep]:
    """All representations matching the target prefix, exhaustively."""
    target = spec.target[: spec.prefix_len]
    roots = _root_images(spec.alphabet_size, spec.max_image_len)
    tasks = [(target, spec.alphabet_size, spec.max_image_len, spec.prefix_len, r) for r in roots]

    if spec.jobs == 1:
        raw = [_search_root(t) for t in tasks]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            raw = list(pool.map(_search_root, tasks))

    target_size = max(spec.target) + 1
    found = []
    for chunk in raw:
        for images, coding in chunk:
            f = Morphism(images)
            found.append(FoundRep(f, Coding(coding, target_size), complexity(f)))
    found.sort(key=lambda r: (r.complexity, r.morphism.images, r.coding.table))
    return found


def canonical_form(
    f: Morphism, coding: Coding, budget: int = 10**4
) -> tuple[Morphism, Coding]:
    """Rename symbols by first appearance in the fixed point at 0.

    Every symbol must occur within budget symbols of the fixed point;
    unreachable symbols make the renaming undefined.
    """
    seq = FixedPoint(f, 0)
    order: list[int] = []
    seen = set()
    pos = 0
    while len(order) < f.alphabet_size and pos < budget:
        s = seq.at(pos)
        if s not in seen:
            seen.add(s)
            order.append(s)
        pos += 1
    if len(order) < f.alphabet_size:
        raise ValueError(f"not all symbols occur in the first {budget} symbols")
    rename = {old: new for new, old in enumerate(order)}
    images = [()] * f.alphabet_size
    for old, new in rename.items():
        images[new] = tuple(rename[s] for s in f.images[old])
    table = [0] * f.alphabet_size
    for old, new in rename.items():
        table[new] = coding.table[old]
    return Morphism(tuple(images)), Coding(tuple(table), coding.target_size)
