"""Named verification checks and the report they produce.

Each check records a status of ``pass``, ``fail`` or ``flagged``.  A flag
means the computation went through but disagrees with the form in which the
claim was originally stated; it is listed but does not fail the run.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from . import __version__
from . import automorphisms as aut
from . import link
from .even import cox_to_free, free_to_cox
from .words import CoxWord, FreeWord

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"


class UnknownCheck(ValueError):
    pass


@dataclass
class Check:
    id: str
    paper_ref: str
    status: str
    parameters: Dict[str, object] = field(default_factory=dict)
    witness: Dict[str, object] = field(default_factory=dict)


@dataclass
class Report:
    version: str
    checks: List[Check]

    @property
    def summary(self) -> Dict[str, int]:
        counts = {PASS: 0, FAIL: 0, FLAGGED: 0}
        for c in self.checks:
            counts[c.status] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "checks": [asdict(c) for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"coxfree {self.version}"]
        for c in self.checks:
            lines.append(f"[{c.status.upper():7}] {c.id}: {c.paper_ref}")
            for key in sorted(c.parameters):
                lines.append(f"    param {key} = {c.parameters[key]}")
            for key in sorted(c.witness):
                lines.append(f"    {key}: {c.witness[key]}")
        s = self.summary
        lines.append(f"{s[PASS]} pass, {s[FLAGGED]} flagged, {s[FAIL]} fail ({s['total']} checks)")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# enumeration helpers
# ---------------------------------------------------------------------------

def cox_words(n: int, max_len: int) -> Iterable[CoxWord]:
    """All reduced words of ``W_n`` up to ``max_len``, shortest first."""
    level = [()]
    for length in range(max_len + 1):
        for letters in level:
            yield CoxWord(n, letters)
        level = [w + (a,) for w in level for a in range(1, n + 1) if not w or w[-1] != a]


def free_words(m: int, max_len: int) -> Iterable[FreeWord]:
    alphabet = [a for k in range(1, m + 1) for a in (k, -k)]
    level = [()]
    for length in range(max_len + 1):
        for letters in level:
            yield FreeWord(m, letters)
        level = [w + (a,) for w in level for a in alphabet if not w or w[-1] != -a]


def _x(m: int, *letters: int) -> FreeWord:
    return FreeWord(m, letters)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def check_even_iso(ns: Sequence[int], **_) -> Check:
    counts = {"round_trip_free": 0, "round_trip_cox": 0, "homomorphism_pairs": 0}
    failures: List[str] = []
    bounds = {}
    for n in ns:
        cox_len = 6
        free_len = 3
        hom_len = 4 if n <= 5 else 2
        bounds[n] = {"cox_len": cox_len, "free_len": free_len, "hom_len": hom_len}
        for u in free_words(n - 1, free_len):
            counts["round_trip_free"] += 1
            if cox_to_free(free_to_cox(u)) != u:
                failures.append(f"n={n} free {u}")
        even = [u for u in cox_words(n, cox_len) if len(u) % 2 == 0]
        for u in even:
            counts["round_trip_cox"] += 1
            if free_to_cox(cox_to_free(u)) != u:
                failures.append(f"n={n} cox {u}")
        short = [u for u in even if len(u) <= hom_len]
        images = {u: cox_to_free(u) for u in short}
        for u, v in itertools.product(short, repeat=2):
            counts["homomorphism_pairs"] += 1
            if cox_to_free(u * v) != images[u] * images[v]:
                failures.append(f"n={n} hom {u} | {v}")
    n = ns[0] if ns else 4
    w2w3 = cox_to_free(CoxWord(n, (2, 3)))
    return Check(
        "L-even-iso",
        "the even subgroup <w1 wi> of W_n is free on x_j = w1 w_{j+1}",
        FAIL if failures else PASS,
        {"n": list(ns), "bounds": bounds},
        {
            **counts,
            "failures": failures[:5],
            "w2 w3": str(w2w3),
            "note": "w_i w_j = (w_i w_1)(w_1 w_j) is x_{i-1}^-1 x_{j-1}; the prose reading x_{i-1} x_{j-1} drops the inverse",
        },
    )


def check_iota_gens(ns: Sequence[int], **_) -> Check:
    failures: List[str] = []
    examples = {}
    for n in ns:
        m = n - 1
        if aut.iota(aut.inner_cox(n, 1)) != aut.r_aut(m):
            failures.append(f"n={n}: iota(C(1)) != r")
        for i, j in itertools.permutations(range(2, n + 1), 2):
            got = aut.iota(aut.partial_conj(n, i, j)).images[i - 2]
            want = _x(m, j - 1, -(i - 1), j - 1)
            if got != want:
                failures.append(f"n={n}: iota(P({i},{j}))(x{i-1}) = {got}")
        for i in range(2, n + 1):
            phi = aut.iota(aut.transposition(n, 1, i))
            for j in range(1, m + 1):
                want = _x(m, -(i - 1)) if j == i - 1 else _x(m, -(i - 1), j)
                if phi.images[j - 1] != want:
                    failures.append(f"n={n}: iota(S(1,{i}))(x{j}) = {phi.images[j - 1]}")
        examples[n] = str(aut.iota(aut.partial_conj(n, 2, 3)))
    return Check(
        "L-iota-gens",
        "generator images: P(i,j) sends x_{i-1} to x_{j-1} x_{i-1}^-1 x_{j-1}; C(1) maps to r; "
        "the swap of w1, wi sends x_j to x_{i-1}^-1 x_j",
        FAIL if failures else PASS,
        {"n": list(ns)},
        {"iota(P(2,3))": examples, "failures": failures[:5]},
    )


def check_dagger(ns: Sequence[int], **_) -> Check:
    """``P(i,k) ∘ P(i,j)`` on ``x_{i-1}``: computed word versus the stated one."""
    failures: List[str] = []
    differs = 0
    sample = None
    total = 0
    for n in ns:
        m = n - 1
        for i, j, k in itertools.permutations(range(2, n + 1), 3):
            total += 1
            f = aut.iota(aut.compose_cox(aut.partial_conj(n, i, k), aut.partial_conj(n, i, j)))
            got = f.images[i - 2]
            computed = _x(m, j - 1, -(k - 1), i - 1, -(k - 1), j - 1)
            stated = _x(m, j - 1, k - 1, i - 1, k - 1, j - 1)
            if got != computed:
                failures.append(f"n={n} i={i} j={j} k={k}: {got}")
            if got != stated:
                differs += 1
                if sample is None:
                    sample = {"n": n, "i": i, "j": j, "k": k, "computed": str(got), "stated": str(stated)}
    status = FAIL if failures else (FLAGGED if differs else PASS)
    witness = {"cases": total, "differs_from_stated": differs, "failures": failures[:5]}
    if sample:
        witness["sample"] = sample
        witness["note"] = ("computed x_{j-1} x_{k-1}^-1 x_{i-1} x_{k-1}^-1 x_{j-1}; the stated form "
                           "omits both inverses (it matches the Coxeter word w_j w_k w_i w_k w_j letter for letter)")
    return Check("L-dagger", "P(i,k) after P(i,j) sends x_{i-1} to a length-5 palindrome in x_{j-1}, x_{k-1}, x_{i-1}",
                 status, {"n": list(ns)}, witness)


def check_pc_commute(ns: Sequence[int], **_) -> Check:
    """Which pairs of partial conjugations commute in Aut(W_n)."""
    failures: List[str] = []
    counterexamples: List[str] = []
    pairs = 0
    for n in ns:
        for i, j, k, l in itertools.product(range(1, n + 1), repeat=4):
            if i == j or k == l or (i, j) == (k, l):
                continue
            pairs += 1
            a, b = aut.partial_conj(n, i, j), aut.partial_conj(n, k, l)
            commute = aut.compose_cox(a, b) == aut.compose_cox(b, a)
            if commute != (i != k and j != k and l != i):
                failures.append(f"n={n}: P({i},{j}), P({k},{l})")
            if i != k and not commute and len(counterexamples) < 3:
                counterexamples.append(f"n={n}: P({i},{j}), P({k},{l})")
    status = FAIL if failures else (FLAGGED if counterexamples else PASS)
    witness = {"pairs": pairs, "failures": failures[:5]}
    if counterexamples:
        witness["note"] = ("P(i,j) and P(k,l) commute iff i != k, j != k and l != i; "
                           "the stated condition i != k alone is not sufficient")
        witness["counterexamples"] = counterexamples
    return Check("L-pc-commute", "partial conjugations P(i,j), P(k,l) commute when their acted-on letters differ",
                 status, {"n": list(ns)}, witness)


def check_inject(ns: Sequence[int], ball: int = 2, **_) -> Check:
    sizes = {}
    bad = []
    for n in ns:
        size, kernel = aut.iota_kernel_on_ball(n, ball)
        sizes[n] = size
        bad += [f"n={n}: {a}" for a in kernel]
    return Check(
        "L-inject",
        "iota: Aut(W_n) -> Aut(F_{n-1}) is injective",
        FAIL if bad else PASS,
        {"n": list(ns), "ball": ball},
        {"ball_sizes": sizes, "kernel_elements": bad[:5]},
    )


def check_inner_image(ns: Sequence[int], **_) -> Check:
    failures: List[str] = []
    conjugators = {}
    mismatched = []
    for n in ns:
        m = n - 1
        r = aut.r_aut(m)
        for i in range(1, n + 1):
            g = aut.detect_inner(aut.compose_free(r, aut.iota(aut.inner_cox(n, i))))
            if g is None:
                failures.append(f"n={n}: r o iota(C({i})) is not inner")
                continue
            conjugators[f"n={n} C({i})"] = str(g)
            expected = FreeWord(m) if i == 1 else _x(m, i - 1)
            if g != expected:
                failures.append(f"n={n}: C({i}) conjugator {g}, expected {expected}")
            if i >= 2 and g != _x(m, 1):
                mismatched.append(f"C({i})")
    status = FAIL if failures else (FLAGGED if mismatched else PASS)
    witness = {"conjugators": conjugators, "failures": failures[:5]}
    if mismatched:
        witness["note"] = ("iota(C(i)) = r o conj(x_{i-1}) for i >= 2; the stated form r o conj(x_1) "
                           "holds only for i = 2")
        witness["subscript_mismatch"] = sorted(set(mismatched))
    return Check("L-inn-image", "iota(Inn(W_n)) lies in Inn(F_{n-1}) extended by r", status,
                 {"n": list(ns)}, witness)


def check_comm(ns: Sequence[int], **_) -> Check:
    failures: List[str] = []
    checked = 0
    acted_on_w1 = {}
    for n in ns:
        m = n - 1
        r = aut.r_aut(m)
        for name, phi in aut.aut_generators(n).items():
            checked += 1
            g = aut.detect_inner(aut.commutator_free(r, aut.iota(phi)))
            if g is None:
                failures.append(f"n={n}: [r, iota({name})] not inner")
        for i in range(2, n + 1):
            g = aut.detect_inner(aut.commutator_free(r, aut.iota(aut.partial_conj(n, 1, i))))
            acted_on_w1[f"n={n} P(1,{i})"] = str(g)
            if g != _x(m, -(i - 1), -(i - 1)):
                failures.append(f"n={n}: [r, iota(P(1,{i}))] conjugator {g}")
    return Check(
        "L-comm",
        "[r, iota(phi)] is inner for every phi in Aut(W_n); conjugator x_{i-1}^-2 when w1 is acted on",
        FAIL if failures else PASS,
        {"n": list(ns), "commutator": "r g r^-1 g^-1, factors acting left to right"},
        {"generators_checked": checked, "acted_on_w1_conjugators": acted_on_w1, "failures": failures[:5]},
    )


def check_mu_tau(ns: Sequence[int], power: int = 4, wrap: str = aut.WRAP_MOD_N, **_) -> Check:
    failures: List[str] = []
    unusable: List[str] = []
    per_n = {}
    for n in ns:
        try:
            mu, tau = aut.mu(n, wrap), aut.tau(n, wrap)
        except aut.AutomorphismError as exc:
            unusable.append(f"n={n}: {exc}")
            continue
        imu, itau = aut.iota(mu), aut.iota(tau)
        inner = aut.detect_inner(aut.commutator_free(imu, itau))
        info = {
            "mu_image_lengths": [len(w) for w in imu.images],
            "tau_image_lengths": [len(w) for w in itau.images],
            "commutator_inner": None if inner is None else str(inner),
            "mu_periodic_generator": aut.has_periodic_generator(imu, power),
            "tau_periodic_generator": aut.has_periodic_generator(itau, power),
        }
        per_n[n] = info
        if min(info["mu_image_lengths"]) < 3:
            failures.append(f"n={n}: iota(mu) has an image shorter than 3")
        if inner is not None:
            failures.append(f"n={n}: [iota(mu), iota(tau)] is inner")
        if info["mu_periodic_generator"]:
            failures.append(f"n={n}: iota(mu) has a periodic generator")
    status = FAIL if failures else (FLAGGED if unusable else PASS)
    witness = {
        "per_n": per_n,
        "failures": failures,
        "evidence": "partial: necessary conditions only (no conjugacy between the two, "
                    "no basis element periodic up to the given power); not a full irreducibility proof",
    }
    if unusable:
        witness["convention_unusable"] = unusable
    return Check("A-mu-tau", "mu and tau are two non-commuting candidates for loxodromic elements",
                 status, {"n": list(ns), "power": power, "wrap": wrap}, witness)


def check_link_dist(**_) -> Check:
    g = link.standard_link()
    path = link.shortest_path(g, "b-", "d-")
    d = len(path) - 1
    return Check(
        "B-link-dist",
        "d_lk(b-, d-) = 4pi/3 > pi in the vertex link of Brady's complex",
        PASS if d == 4 else FAIL,
        {"unit": "pi/3"},
        {"distance_units": d, "path": path},
    )


def check_girth(**_) -> Check:
    g = link.standard_link()
    short = link.shortest_cycle(g)
    return Check(
        "B-girth",
        "the link is CAT(1): every embedded cycle has length >= 2pi",
        PASS if short is None else FAIL,
        {"unit": "pi/3"},
        {"vertices": len(g.vertices), "edges": len(g.edges),
         "short_cycle": short, "edge_deletion_tests": len(g.edges)},
    )


def check_axis(**_) -> Check:
    g = link.standard_link()
    stated = link.BD_INV_TURNS
    action = link.BD_INV_ACTION_TURNS
    turns = {f"{a},{b}": link.link_distance(g, a, b) for a, b in stated.turns + action.turns}
    local = link.certify_axis(g, stated)
    strict_stated = [link.rank_one_flat_obstruction(g, a, b) for a, b in stated.turns]
    strict_action = [link.rank_one_flat_obstruction(g, a, b) for a, b in action.turns]
    witness = {
        "turn_distances_units": turns,
        "local_geodesic_stated_turns": local,
        "strict_stated_turns": strict_stated,
        "local_geodesic_action_turns": link.certify_axis(g, action),
        "strict_action_turns": strict_action,
        "braid_word": link.AXIS_BRAID_WORD,
    }
    if not local:
        status = FAIL
    elif all(strict_stated):
        status = PASS
    else:
        status = FLAGGED
        witness["note"] = ("turn (b+, d-) has angle exactly pi, not more; the axis is still a local "
                           "geodesic, and the turns read off the action, (d+, b+) and (b-, d-), are both 4pi/3")
    return Check("B-axis", "the axis of bd^-1 turns by more than pi at every vertex, so it is rank one",
                 status, {"unit": "pi/3", "periodic": True}, witness)


CHECKS: Dict[str, Callable[..., Check]] = {
    "L-even-iso": check_even_iso,
    "L-iota-gens": check_iota_gens,
    "L-dagger": check_dagger,
    "L-pc-commute": check_pc_commute,
    "L-inject": check_inject,
    "L-inn-image": check_inner_image,
    "L-comm": check_comm,
    "A-mu-tau": check_mu_tau,
    "B-link-dist": check_link_dist,
    "B-girth": check_girth,
    "B-axis": check_axis,
}


def run_suite(
    ids: Optional[Iterable[str]] = None,
    ns: Sequence[int] = (4, 5, 6),
    ball: int = 2,
    power: int = 4,
    wrap: str = aut.WRAP_MOD_N,
) -> Report:
    selected = list(CHECKS) if ids is None else list(ids)
    unknown = [i for i in selected if i not in CHECKS]
    if unknown:
        raise UnknownCheck(f"unknown check id(s): {', '.join(unknown)}")
    wrap = aut.normalize_wrap(wrap)
    ns = list(ns)
    checks = [CHECKS[i](ns=ns, ball=ball, power=power, wrap=wrap) for i in CHECKS if i in selected]
    return Report(__version__, checks)
