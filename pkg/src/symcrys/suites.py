"""Randomized and exhaustive identity checks shared by the CLI and the tests.

Every check returns a report entry ``{"check", "status", "cases", "detail"}``.
Randomness comes from a seeded ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from itertools import product

from .rootdata import DominantWeight, RootDatum, Weight
from .scalars import ZERO, q_pow
from .scalars.laurent import quantum_factorial
from .scalars.ratfunc import RatFunc
from .uqminus import (
    FreeElement,
    e_prime,
    e_star,
    kashiwara_form,
    mul_f,
    mul_f_divided,
    mul_f_right,
    weight_basis,
)
from .vtheta import VElement, act_E, act_F, act_T, psi_crosscheck, v_form


def _entry(check, failures, cases, detail=""):
    return {"check": check, "status": "fail" if failures else "pass", "cases": cases,
            "detail": detail or ("; ".join(failures[:3]) if failures else "")}


def _random_coeff(rng) -> RatFunc:
    return q_pow(rng.randint(-2, 2)) * rng.choice([1, -1, 2, 3])


def random_word(rng, rd: RootDatum, max_len: int) -> tuple:
    return tuple(rng.choice(rd.indices) for _ in range(rng.randint(0, max_len)))


def random_free(rng, rd: RootDatum, max_len: int) -> FreeElement:
    """A few shuffles of one random word, with random coefficients."""
    w = list(random_word(rng, rd, max_len))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        rng.shuffle(w)
        terms[tuple(w)] = _random_coeff(rng)
    return FreeElement(terms)


def random_velement(rng, rd: RootDatum, max_len: int) -> VElement:
    """Shuffles of a random word with letters randomly swapped for their theta partners."""
    w = list(random_word(rng, rd, max_len))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        rng.shuffle(w)
        v = tuple(rd.th(a) if rng.random() < 0.5 else a for a in w)
        terms[v] = _random_coeff(rng)
    return VElement(rd, terms)


# -- U_q^- ---------------------------------------------------------------------


def check_qboson(rd: RootDatum, samples: int = 200, max_len: int = 5, seed: int = 1) -> dict:
    """e'_i f_j - q^{-(a_i,a_j)} f_j e'_i = delta_ij on random words, exactly."""
    rng = random.Random(seed)
    fails = []
    for _ in range(samples):
        w = FreeElement.word(random_word(rng, rd, max_len))
        i, j = rng.choice(rd.indices), rng.choice(rd.indices)
        lhs = e_prime(rd, i, mul_f(j, w)) - mul_f(j, e_prime(rd, i, w)).scale(q_pow(-rd.pair(i, j)))
        rhs = w if i == j else FreeElement()
        if lhs != rhs:
            fails.append(f"i={i} j={j} w={list(w.terms)}")
    return _entry("q-boson", fails, samples)


def serre_element(rd: RootDatum, i, j) -> FreeElement:
    """sum_k (-1)^k f_i^{(k)} f_j f_i^{(b-k)}, b = 1 - (a_i^vee, a_j)."""
    b = 1 - 2 * rd.pair(i, j) // rd.pair(i, i)
    out = FreeElement()
    for k in range(b + 1):
        term = mul_f_divided(rd, i, k, mul_f(j, mul_f_divided(rd, i, b - k, FreeElement.one())))
        out = out + term.scale((-1) ** k)
    return out


def check_serre(rd: RootDatum) -> dict:
    """Serre elements pair to zero with every word of their weight."""
    fails, cases = [], 0
    for i in rd.indices:
        for j in rd.indices:
            if i == j or rd.pair(i, j) == 0:
                continue
            s = serre_element(rd, i, j)
            wb = weight_basis(s.weight(), rd)
            for w in wb.words:
                cases += 1
                if kashiwara_form(rd, FreeElement.word(w), s):
                    fails.append(f"(i,j)=({i},{j}) word {w}")
    return _entry("serre-radical", fails, cases)


def check_uq_adjunctions(rd: RootDatum, samples: int = 100, max_len: int = 3, seed: int = 2) -> dict:
    """(e'_i a, b) = (a, f_i b), (e*_i a, b) = (a, b f_i) and (a, b) = (b, a)."""
    rng = random.Random(seed)
    fails = []
    for _ in range(samples):
        b = random_free(rng, rd, max_len)
        i = rng.choice(rd.indices)
        # a in the weight of f_i b, built from the same letters
        letters = [i] + list(next(iter(b.terms)))
        rng.shuffle(letters)
        a = FreeElement({tuple(letters): _random_coeff(rng)})
        if kashiwara_form(rd, e_prime(rd, i, a), b) != kashiwara_form(rd, a, mul_f(i, b)):
            fails.append(f"e' adjunction i={i}")
        if kashiwara_form(rd, e_star(rd, i, a), b) != kashiwara_form(rd, a, mul_f_right(b, i)):
            fails.append(f"e* adjunction i={i}")
        c = random_free(rng, rd, max_len)
        if kashiwara_form(rd, b, c) != kashiwara_form(rd, c, b):
            fails.append("symmetry")
    return _entry("uq-adjunctions", fails, samples)


def check_serre_eprime(rd: RootDatum, samples: int = 30, max_len: int = 4, seed: int = 3) -> dict:
    """sum_k (-1)^k e'^{(k)}_i e'_j e'^{(b-k)}_i kills random elements modulo the radical."""
    rng = random.Random(seed)
    fails, cases = [], 0
    pairs = [(i, j) for i in rd.indices for j in rd.indices if i != j and rd.pair(i, j)]
    for _ in range(samples):
        i, j = rng.choice(pairs)
        b = 1 - 2 * rd.pair(i, j) // rd.pair(i, i)
        base = [i] * b + [j] + [rng.choice(rd.indices) for _ in range(rng.randint(0, max_len - b - 1))]
        rng.shuffle(base)
        a = FreeElement({tuple(base): 1})
        out = None
        for k in range(b + 1):
            x = a
            for _ in range(b - k):
                x = e_prime(rd, i, x)
            x = e_prime(rd, j, x)
            for _ in range(k):
                x = e_prime(rd, i, x)
            c = RatFunc.from_laurent(quantum_factorial(k, rd.d(i)) * quantum_factorial(b - k, rd.d(i)))
            x = x.scale(c.inverse() * (-1) ** k)
            out = x if out is None else out + x
        cases += 1
        if out and not weight_basis(out.weight(), rd).is_zero(out):
            fails.append(f"(i,j)=({i},{j}) on {base}")
    return _entry("serre-eprime", fails, cases)


# -- V_theta(lambda) -------------------------------------------------------------


def check_v_relation(rd: RootDatum, lam: DominantWeight, samples: int = 200, max_len: int = 4, seed: int = 4) -> dict:
    """E_i F_j = q^{-(a_i,a_j)} F_j E_i + delta_ij + delta_{theta i, j} T_i on random elements."""
    rng = random.Random(seed)
    fails = []
    for _ in range(samples):
        u = random_velement(rng, rd, max_len)
        i, j = rng.choice(rd.indices), rng.choice(rd.indices)
        lhs = act_E(i, act_F(j, u), lam)
        rhs = act_F(j, act_E(i, u, lam)).scale(q_pow(-rd.pair(i, j)))
        if i == j:
            rhs = rhs + u
        if rd.th(i) == j:
            rhs = rhs + act_T(i, u, lam)
        if lhs != rhs:
            fails.append(f"i={i} j={j}")
    return _entry("v-commutation", fails, samples)


def check_v_form(rd: RootDatum, lam: DominantWeight, samples: int = 200, max_len: int = 3, seed: int = 5) -> dict:
    """Adjunction, symmetry, T_{theta i} = T_i, and vanishing across blocks."""
    rng = random.Random(seed)
    fails = []
    for _ in range(samples):
        v = random_velement(rng, rd, max_len)
        i = rng.choice(rd.indices)
        u = random_velement(rng, rd, max_len + 1)
        if v_form(act_E(i, u, lam), v, lam) != v_form(u, act_F(i, v), lam):
            fails.append(f"adjunction i={i}")
        if v_form(u, act_F(i, v), lam) != v_form(act_F(i, v), u, lam):
            fails.append("symmetry")
        if act_T(rd.th(i), v, lam) != act_T(i, v, lam):
            fails.append(f"T_theta({i}) != T_{i}")
        w = random_velement(rng, rd, max_len)
        if w.grade != v.grade and v_form(v, w, lam):
            fails.append(f"blocks {v.grade} and {w.grade} are not orthogonal")
    return _entry("v-form", fails, samples)


def check_psi(rd: RootDatum, lam: DominantWeight, max_len: int = 4) -> dict:
    """E-action by commutation versus the vac' model, every word up to max_len, every i."""
    fails, cases = [], 0
    for n in range(max_len + 1):
        for w in product(rd.indices, repeat=n):
            for i in rd.indices:
                cases += 1
                if not psi_crosscheck(w, i, rd, lam):
                    fails.append(f"word {w} i={i}")
    return _entry("psi-crosscheck", fails, cases)


def check_v_serre(rd: RootDatum, lam: DominantWeight, samples: int = 20, max_len: int = 2, seed: int = 6) -> dict:
    """Serre combinations of the F's annihilate random elements in V_theta(lambda)."""
    from .vtheta import v_block_basis

    rng = random.Random(seed)
    fails = []
    pairs = [(i, j) for i in rd.indices for j in rd.indices if i != j and rd.pair(i, j)]
    for _ in range(samples):
        i, j = rng.choice(pairs)
        u = VElement.word(rd, random_word(rng, rd, max_len))
        s = serre_element(rd, i, j)
        img = VElement(rd, {w + next(iter(u.terms)): c for w, c in s.terms.items()})
        if img and not v_block_basis(img.grade, rd, lam).is_zero(img):
            fails.append(f"(i,j)=({i},{j})")
    return _entry("v-serre", fails, samples)


def uq_suite(rd: RootDatum, samples: int = 200, seed: int = 1) -> list:
    return [
        check_qboson(rd, samples, 5, seed),
        check_serre(rd),
        check_uq_adjunctions(rd, max(samples // 2, 1), 3, seed + 1),
        check_serre_eprime(rd, 30, 4, seed + 2),
    ]


def v_suite(rd: RootDatum, lam: DominantWeight, samples: int = 200, psi_len: int = 4, seed: int = 4) -> list:
    return [
        check_v_relation(rd, lam, samples, 4, seed),
        check_v_form(rd, lam, samples, 3, seed + 1),
        check_v_serre(rd, lam, 20, 2, seed + 2),
        check_psi(rd, lam, psi_len),
    ]
