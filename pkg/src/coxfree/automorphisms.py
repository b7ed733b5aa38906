"""Automorphisms of ``W_n`` and ``F_m`` given by generator images.

Composition follows function notation: ``compose(f, g)`` applies ``g``
first.  Products written as ``F1 F2 ... Fk`` therefore mean
``F1 ∘ F2 ∘ ... ∘ Fk``.

Free automorphisms carry an optional inverse certificate.  Anything built
from Coxeter generators gets one for free, since every generator is an
involution or a permutation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from .even import cox_to_free
from .words import (
    CoxWord,
    FreeWord,
    RankError,
    apply_map_cox,
    apply_map_free,
    cyclic_reduce,
    invert,
)

WRAP_MOD_N = "mod-n"
WRAP_MOD_N_MINUS_1 = "mod-n-1"
_WRAP_ALIASES = {
    "mod-n": WRAP_MOD_N,
    "mod-n-1": WRAP_MOD_N_MINUS_1,
    "mod-n-minus-1": WRAP_MOD_N_MINUS_1,
}


class AutomorphismError(ValueError):
    """Malformed automorphism data or invalid constructor arguments."""


class MissingInverse(AutomorphismError):
    """An inverse was needed but the automorphism carries no certificate."""


@dataclass(frozen=True)
class CoxAut:
    rank: int
    images: Tuple[CoxWord, ...]
    inverse_images: Optional[Tuple[CoxWord, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.rank:
            raise AutomorphismError(f"expected {self.rank} images, got {len(self.images)}")
        for k, img in enumerate(self.images, 1):
            if img.rank != self.rank:
                raise RankError(f"image of w{k} has rank {img.rank}, expected {self.rank}")
            if len(img) % 2 == 0:
                raise AutomorphismError(f"image of w{k} has even length: {img}")
            if img * img:
                raise AutomorphismError(f"image of w{k} is not an involution: {img}")
        if self.inverse_images is not None:
            inv = tuple(self.inverse_images)
            object.__setattr__(self, "inverse_images", inv)
            for k in range(1, self.rank + 1):
                w = CoxWord(self.rank, (k,))
                if apply_map_cox(apply_map_cox(w, self.images), inv) != w:
                    raise AutomorphismError(f"inverse certificate fails on w{k}")

    def __call__(self, u: CoxWord) -> CoxWord:
        return apply_map_cox(u, self.images)

    def is_identity(self) -> bool:
        return all(img.letters == (k,) for k, img in enumerate(self.images, 1))

    def __str__(self) -> str:
        return ", ".join(f"w{k} -> {img}" for k, img in enumerate(self.images, 1))


@dataclass(frozen=True)
class FreeAut:
    rank: int
    images: Tuple[FreeWord, ...]
    inverse_images: Optional[Tuple[FreeWord, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.rank:
            raise AutomorphismError(f"expected {self.rank} images, got {len(self.images)}")
        for k, img in enumerate(self.images, 1):
            if img.rank != self.rank:
                raise RankError(f"image of x{k} has rank {img.rank}, expected {self.rank}")
        if abs(_abelian_det(self.images)) != 1:
            # necessary for invertibility; the full test is Whitehead's algorithm
            raise AutomorphismError("images do not generate the abelianization, so the map is not invertible")
        if self.inverse_images is not None:
            inv = tuple(self.inverse_images)
            object.__setattr__(self, "inverse_images", inv)
            if len(inv) != self.rank:
                raise AutomorphismError("inverse certificate has the wrong length")
            for k in range(1, self.rank + 1):
                x = FreeWord(self.rank, (k,))
                if apply_map_free(apply_map_free(x, self.images), inv) != x:
                    raise AutomorphismError(f"inverse certificate fails on x{k}")
                if apply_map_free(apply_map_free(x, inv), self.images) != x:
                    raise AutomorphismError(f"inverse certificate fails on x{k}")

    def __call__(self, u: FreeWord) -> FreeWord:
        return apply_map_free(u, self.images)

    def is_identity(self) -> bool:
        return all(img.letters == (k,) for k, img in enumerate(self.images, 1))

    def __str__(self) -> str:
        return ", ".join(f"x{k} -> {img}" for k, img in enumerate(self.images, 1))


def _abelian_det(images: Sequence[FreeWord]) -> Fraction:
    m = len(images)
    rows = [[Fraction(0)] * m for _ in range(m)]
    for r, img in enumerate(images):
        for a in img.letters:
            rows[r][abs(a) - 1] += 1 if a > 0 else -1
    det = Fraction(1)
    for c in range(m):
        pivot = next((r for r in range(c, m) if rows[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, m):
            f = rows[r][c] / rows[c][c]
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return det


def _trusted(cls, rank, images, inverse=None):
    # results of composing certified automorphisms are certified already
    obj = object.__new__(cls)
    object.__setattr__(obj, "rank", rank)
    object.__setattr__(obj, "images", tuple(images))
    object.__setattr__(obj, "inverse_images", None if inverse is None else tuple(inverse))
    return obj


# ---------------------------------------------------------------------------
# Coxeter side
# ---------------------------------------------------------------------------

def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise AutomorphismError(f"index {i} out of range 1..{n}")


def identity_cox(n: int) -> CoxAut:
    gens = tuple(CoxWord(n, (k,)) for k in range(1, n + 1))
    return CoxAut(n, gens, gens)


def perm_aut(n: int, perm: Sequence[int]) -> CoxAut:
    """Graph automorphism ``w_i -> w_{perm[i-1]}``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise AutomorphismError(f"{perm} is not a permutation of 1..{n}")
    inverse = [0] * n
    for i, p in enumerate(perm, 1):
        inverse[p - 1] = i
    return CoxAut(
        n,
        tuple(CoxWord(n, (p,)) for p in perm),
        tuple(CoxWord(n, (p,)) for p in inverse),
    )


def transposition(n: int, i: int, j: int) -> CoxAut:
    _check_index(n, i)
    _check_index(n, j)
    if i == j:
        raise AutomorphismError("transposition needs two distinct indices")
    perm = list(range(1, n + 1))
    perm[i - 1], perm[j - 1] = j, i
    return perm_aut(n, perm)


def partial_conj(n: int, i: int, j: int) -> CoxAut:
    """``w_i -> w_j w_i w_j``, all other generators fixed."""
    _check_index(n, i)
    _check_index(n, j)
    if i == j:
        raise AutomorphismError(f"partial conjugation P({i},{j}) needs distinct indices")
    images = [CoxWord(n, (k,)) for k in range(1, n + 1)]
    images[i - 1] = CoxWord(n, (j, i, j))
    return CoxAut(n, tuple(images), tuple(images))


def inner_cox(n: int, i: int) -> CoxAut:
    """Conjugation of every generator by ``w_i``."""
    _check_index(n, i)
    images = tuple(CoxWord(n, (i, k, i)) for k in range(1, n + 1))
    return CoxAut(n, images, images)


def compose_cox(f: CoxAut, g: CoxAut) -> CoxAut:
    """``f ∘ g``: apply ``g`` first."""
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    images = tuple(apply_map_cox(img, f.images) for img in g.images)
    inverse = None
    if f.inverse_images is not None and g.inverse_images is not None:
        inverse = tuple(apply_map_cox(img, g.inverse_images) for img in f.inverse_images)
    return _trusted(CoxAut, f.rank, images, inverse)


def inverse_cox(f: CoxAut) -> CoxAut:
    if f.inverse_images is not None:
        return _trusted(CoxAut, f.rank, f.inverse_images, f.images)
    if compose_cox(f, f).is_identity():
        return f
    raise MissingInverse("CoxAut has no inverse certificate and is not an involution")


def aut_generators(n: int) -> Dict[str, CoxAut]:
    """The generating set used throughout: transpositions, partial and inner conjugations.

    Keys use the expression grammar of :mod:`coxfree.parsing`.
    """
    gens: Dict[str, CoxAut] = {}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        gens[f"S({i},{j})"] = transposition(n, i, j)
    for i, j in itertools.permutations(range(1, n + 1), 2):
        gens[f"P({i},{j})"] = partial_conj(n, i, j)
    for i in range(1, n + 1):
        gens[f"C({i})"] = inner_cox(n, i)
    return gens


# ---------------------------------------------------------------------------
# Free side
# ---------------------------------------------------------------------------

def identity_free(m: int) -> FreeAut:
    gens = tuple(FreeWord(m, (k,)) for k in range(1, m + 1))
    return FreeAut(m, gens, gens)


def r_aut(m: int) -> FreeAut:
    """Invert every basis element."""
    if m < 2:
        raise RankError(f"free rank must be >= 2, got {m}")
    images = tuple(FreeWord(m, (-k,)) for k in range(1, m + 1))
    return FreeAut(m, images, images)


def conj_free(g: FreeWord) -> FreeAut:
    """Inner automorphism ``x -> g x g^-1``."""
    m = g.rank
    gi = invert(g)
    images = tuple(g * FreeWord(m, (k,)) * gi for k in range(1, m + 1))
    inverse = tuple(gi * FreeWord(m, (k,)) * g for k in range(1, m + 1))
    return FreeAut(m, images, inverse)


def compose_free(f: FreeAut, g: FreeAut) -> FreeAut:
    """``f ∘ g``: apply ``g`` first."""
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    images = tuple(apply_map_free(img, f.images) for img in g.images)
    inverse = None
    if f.inverse_images is not None and g.inverse_images is not None:
        inverse = tuple(apply_map_free(img, g.inverse_images) for img in f.inverse_images)
    return _trusted(FreeAut, f.rank, images, inverse)


def inverse_free(f: FreeAut) -> FreeAut:
    if f.inverse_images is not None:
        return _trusted(FreeAut, f.rank, f.inverse_images, f.images)
    if compose_free(f, f).is_identity():
        return f
    raise MissingInverse("FreeAut has no inverse certificate and is not an involution")


def power_free(f: FreeAut, k: int) -> FreeAut:
    if k < 0:
        return power_free(inverse_free(f), -k)
    return reduce(compose_free, [f] * k, identity_free(f.rank))


def iota(phi: CoxAut) -> FreeAut:
    """Restrict ``phi`` to the even subgroup, read in the basis ``x_j = w_1 w_{j+1}``."""
    n = phi.rank
    images = tuple(cox_to_free(phi(CoxWord(n, (1, j + 1)))) for j in range(1, n))
    inverse = None
    if phi.inverse_images is not None:
        inv = _trusted(CoxAut, n, phi.inverse_images)
        inverse = tuple(cox_to_free(inv(CoxWord(n, (1, j + 1)))) for j in range(1, n))
    elif compose_cox(phi, phi).is_identity():
        inverse = images
    return _trusted(FreeAut, n - 1, images, inverse)


def detect_inner(phi: FreeAut) -> Optional[FreeWord]:
    """Return ``g`` with ``phi(x_i) = g x_i g^-1`` for every ``i``, or ``None``.

    ``phi(x_1)`` pins ``g`` down to ``p x_1^k`` where ``p`` is the peeled
    conjugator of its cyclic reduction.  Only ``|k|`` up to the longest
    image plus one can work, since ``|g x_2 g^-1| >= 2|k| + 1``.
    """
    m = phi.rank
    x1 = FreeWord(m, (1,))
    p, core = cyclic_reduce(phi.images[0])
    if core != x1:
        return None
    bound = max(len(img) for img in phi.images) + 1
    for k in sorted(range(-bound, bound + 1), key=lambda t: (abs(t), t)):
        g = p * x1 ** k
        gi = invert(g)
        if all(g * FreeWord(m, (i,)) * gi == phi.images[i - 1] for i in range(1, m + 1)):
            return g
    return None


def commutator_free(f: FreeAut, g: FreeAut) -> FreeAut:
    """The commutator ``f g f^-1 g^-1`` with factors acting in the order written.

    As a composite this is ``g^-1 ∘ f^-1 ∘ g ∘ f``.  For ``f = r`` and an
    involution ``g`` it is ``g ∘ r ∘ g ∘ r``.
    """
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    fi = inverse_free(f)
    gi = inverse_free(g)
    return compose_free(gi, compose_free(fi, compose_free(g, f)))


# ---------------------------------------------------------------------------
# The products mu and tau
# ---------------------------------------------------------------------------

def normalize_wrap(wrap: str) -> str:
    try:
        return _WRAP_ALIASES[wrap]
    except KeyError:
        raise AutomorphismError(f"unknown wrap convention {wrap!r}") from None


def _wrap(k: int, n: int, wrap: str) -> int:
    modulus = n if wrap == WRAP_MOD_N else n - 1
    return (k - 1) % modulus + 1


def _factor_indices(n: int, wrap: str, offsets: Tuple[int, int]) -> List[Tuple[int, int]]:
    if n < 4:
        raise AutomorphismError(f"mu and tau need n >= 4, got {n}")
    wrap = normalize_wrap(wrap)
    factors = []
    for i in range(1, n):
        for off in offsets:
            j = _wrap(i + off, n, wrap)
            if j == i:
                raise AutomorphismError(
                    f"factor P({i},{i}) arises from P({i},{i}+{off}) under {wrap} at n={n}"
                )
            factors.append((i, j))
    return factors


def mu_factors(n: int, wrap: str = WRAP_MOD_N) -> List[Tuple[int, int]]:
    return _factor_indices(n, wrap, (1, 2))


def tau_factors(n: int, wrap: str = WRAP_MOD_N) -> List[Tuple[int, int]]:
    return _factor_indices(n, wrap, (3, 2))


def _product(n: int, factors: List[Tuple[int, int]]) -> CoxAut:
    return reduce(compose_cox, (partial_conj(n, i, j) for i, j in factors), identity_cox(n))


def mu(n: int, wrap: str = WRAP_MOD_N) -> CoxAut:
    """``prod_i P(i,i+1) P(i,i+2)`` over ``1 <= i <= n-1``, leftmost factor applied last."""
    return _product(n, mu_factors(n, wrap))


def tau(n: int, wrap: str = WRAP_MOD_N) -> CoxAut:
    """``prod_i P(i,i+3) P(i,i+2)`` over ``1 <= i <= n-1``, leftmost factor applied last."""
    return _product(n, tau_factors(n, wrap))


def has_periodic_generator(phi: FreeAut, K: int) -> bool:
    """Whether some ``phi^k`` (``1 <= k <= K``) sends a basis element to a conjugate of ``x_j^{±1}``.

    This only looks at rank-one free factors spanned by basis elements, so a
    ``False`` is necessary evidence for full irreducibility, nothing more.
    """
    if K < 1:
        raise ValueError("K must be positive")
    current = phi
    for k in range(1, K + 1):
        if any(len(cyclic_reduce(img)[1]) == 1 for img in current.images):
            return True
        if k == K:
            break
        current = _trusted(FreeAut, phi.rank, [apply_map_free(img, phi.images) for img in current.images])
    return False


# ---------------------------------------------------------------------------
# Injectivity on a ball
# ---------------------------------------------------------------------------

def aut_ball(n: int, L: int) -> List[CoxAut]:
    """All distinct products of at most ``L`` generators, in breadth-first order."""
    gens = list(aut_generators(n).values())
    seen = {identity_cox(n)}
    ball = [identity_cox(n)]
    frontier = ball
    for _ in range(L):
        nxt = []
        for a in frontier:
            for s in gens:
                b = compose_cox(a, s)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        ball.extend(nxt)
        frontier = nxt
    return ball


def iota_kernel_on_ball(n: int, L: int) -> Tuple[int, List[CoxAut]]:
    """Return the ball size and every non-identity element of it killed by ``iota``."""
    ball = aut_ball(n, L)
    bad = [a for a in ball if iota(a).is_identity() and not a.is_identity()]
    return len(ball), bad


def verify_iota_injective_on_ball(n: int, L: int) -> bool:
    return not iota_kernel_on_ball(n, L)[1]
