"""Reduced words in free groups and universal Coxeter groups.

A free-group letter is a nonzero integer: ``k`` is the generator ``x_k`` and
``-k`` its inverse.  A Coxeter letter is a positive integer ``k`` standing
for the involution ``w_k``.  Both word classes normalize on construction, so
an unreduced word cannot exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

MIN_FREE_RANK = 2
MIN_COX_RANK = 3


class RankError(ValueError):
    """Operands live in groups of different rank, or a rank is too small."""


class LetterError(ValueError):
    """A generator index lies outside ``1..rank``."""


def _free_letter(item, rank: int) -> int:
    # accept either a signed int or an (index, sign) pair
    if isinstance(item, tuple):
        index, sign = item
        if sign not in (1, -1):
            raise LetterError(f"sign must be +1 or -1, got {sign!r}")
        letter = index * sign
    else:
        letter = int(item)
    if letter == 0 or abs(letter) > rank:
        raise LetterError(f"free generator index {abs(letter)} out of range 1..{rank}")
    return letter


def _raw(cls, rank: int, letters: Tuple[int, ...]):
    # skip validation for letters already known to be in range and reduced
    obj = object.__new__(cls)
    object.__setattr__(obj, "rank", rank)
    object.__setattr__(obj, "letters", letters)
    return obj


def _free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: list = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def _cox_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: list = []
    for a in letters:
        if stack and stack[-1] == a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """Element of the free group ``F_rank`` on ``x_1, ..., x_rank``."""

    rank: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < MIN_FREE_RANK:
            raise RankError(f"free rank must be >= {MIN_FREE_RANK}, got {self.rank}")
        checked = [_free_letter(a, self.rank) for a in self.letters]
        object.__setattr__(self, "letters", _free_reduce(checked))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, power: int = 1) -> "FreeWord":
        sign = 1 if power >= 0 else -1
        return cls(rank, (sign * index,) * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        # the empty word is still a valid element; truthiness means "nontrivial"
        return bool(self.letters)

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Letters as ``(index, sign)`` pairs."""
        return tuple((abs(a), 1 if a > 0 else -1) for a in self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else invert(self)
        return _raw(FreeWord, self.rank, _free_reduce(base.letters * abs(k)))

    def __str__(self) -> str:
        return format_free(self)


@dataclass(frozen=True)
class CoxWord:
    """Element of the universal Coxeter group ``W_rank``."""

    rank: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < MIN_COX_RANK:
            raise RankError(f"Coxeter rank must be >= {MIN_COX_RANK}, got {self.rank}")
        for a in self.letters:
            if not 1 <= a <= self.rank:
                raise LetterError(f"Coxeter generator index {a} out of range 1..{self.rank}")
        object.__setattr__(self, "letters", _cox_reduce(int(a) for a in self.letters))

    @classmethod
    def identity(cls, rank: int) -> "CoxWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int) -> "CoxWord":
        return cls(rank, (index,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "CoxWord") -> "CoxWord":
        return multiply(self, other)

    def __invert__(self) -> "CoxWord":
        return invert(self)

    def __str__(self) -> str:
        return format_cox(self)


Word = Union[FreeWord, CoxWord]


def reduce_free(rank: int, raw: Iterable) -> FreeWord:
    """Freely reduce a raw letter sequence (signed ints or ``(index, sign)`` pairs)."""
    return FreeWord(rank, tuple(raw))


def reduce_cox(rank: int, raw: Iterable[int]) -> CoxWord:
    return CoxWord(rank, tuple(raw))


def _check_same(u: Word, v: Word) -> None:
    if type(u) is not type(v):
        raise TypeError(f"cannot combine {type(u).__name__} with {type(v).__name__}")
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")


def multiply(u: Word, v: Word) -> Word:
    _check_same(u, v)
    if isinstance(u, CoxWord):
        return _raw(CoxWord, u.rank, _cox_reduce(u.letters + v.letters))
    return _raw(FreeWord, u.rank, _free_reduce(u.letters + v.letters))


def invert(u: Word) -> Word:
    if isinstance(u, CoxWord):
        return _raw(CoxWord, u.rank, u.letters[::-1])
    return _raw(FreeWord, u.rank, tuple(-a for a in reversed(u.letters)))


def cyclic_reduce(u: FreeWord) -> Tuple[FreeWord, FreeWord]:
    """Split ``u`` as ``p * c * p^-1`` with ``c`` cyclically reduced."""
    letters = u.letters
    k = 0
    while 2 * k + 1 < len(letters) and letters[k] == -letters[-1 - k]:
        k += 1
    core = letters[k:len(letters) - k]
    return _raw(FreeWord, u.rank, letters[:k]), _raw(FreeWord, u.rank, core)


def is_conjugate_free(u: FreeWord, v: FreeWord) -> bool:
    _check_same(u, v)
    cu = cyclic_reduce(u)[1].letters
    cv = cyclic_reduce(v)[1].letters
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    doubled = cu + cu
    n = len(cu)
    return any(doubled[s:s + n] == cv for s in range(n))


def apply_map_free(u: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    """Substitute ``images[i-1]`` for ``x_i`` (its inverse for ``x_i^-1``) and reduce."""
    if len(images) != u.rank:
        raise RankError(f"need {u.rank} images, got {len(images)}")
    target = images[0].rank
    out: list = []
    for a in u.letters:
        img = images[abs(a) - 1]
        if img.rank != target:
            raise RankError("images have mixed ranks")
        out.extend(img.letters if a > 0 else (-b for b in reversed(img.letters)))
    return _raw(FreeWord, target, _free_reduce(out))


def apply_map_cox(u: CoxWord, images: Sequence[CoxWord]) -> CoxWord:
    if len(images) != u.rank:
        raise RankError(f"need {u.rank} images, got {len(images)}")
    target = images[0].rank
    out: list = []
    for a in u.letters:
        out.extend(images[a - 1].letters)
    return _raw(CoxWord, target, _cox_reduce(out))


def format_free(u: FreeWord) -> str:
    if not u.letters:
        return "e"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in u.letters)


def format_cox(u: CoxWord) -> str:
    if not u.letters:
        return "e"
    return " ".join(f"w{a}" for a in u.letters)
