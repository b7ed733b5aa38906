"""The even subgroup of ``W_n`` and its identification with ``F_{n-1}``.

The even subgroup is generated by ``w_1 w_{j+1}``, which we name ``x_j``.
Going from Coxeter words to free words reads the word two letters at a
time: ``w_a w_b = (w_a w_1)(w_1 w_b) = x_{a-1}^-1 x_{b-1}`` where ``x_0``
is the empty word.
"""

from __future__ import annotations

from .words import CoxWord, FreeWord, _cox_reduce, _free_reduce, _raw


class ParityError(ValueError):
    """An odd-length Coxeter word was given where an even one is required."""


def is_even(u: CoxWord) -> bool:
    return len(u) % 2 == 0


def cox_to_free(u: CoxWord) -> FreeWord:
    if not is_even(u):
        raise ParityError(f"odd-length word {u} is not in the even subgroup")
    out = []
    letters = u.letters
    for k in range(0, len(letters), 2):
        a, b = letters[k], letters[k + 1]
        if a != 1:
            out.append(-(a - 1))
        if b != 1:
            out.append(b - 1)
    return _raw(FreeWord, u.rank - 1, _free_reduce(out))


def free_to_cox(u: FreeWord) -> CoxWord:
    out = []
    for a in u.letters:
        if a > 0:
            out.extend((1, a + 1))
        else:
            out.extend((-a + 1, 1))
    return _raw(CoxWord, u.rank + 1, _cox_reduce(out))
