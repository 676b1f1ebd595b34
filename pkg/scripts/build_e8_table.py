#!/usr/bin/env python3
"""Build the bundled W(E8) character table without enumerating the group.

W(E8) has 696,729,600 elements, far past direct enumeration, so everything
comes through its maximal-rank reflection subgroups:

1.  Conjugacy classes are discovered by mapping in the class representatives
    of the subsystem subgroups (D8, A8, E7+A1, E6+A2, A4+A4) and by random
    sampling for the remaining elliptic classes, deduplicated by an exact
    conjugation invariant.
2.  Class sizes follow from the subgroup centralizer orders via the
    fixed-coset formula |Z_W(g)| = pi_H(g) / sum_h 1/|Z_H(h)|, where pi_H
    counts fixed points on an explicit coset model (the W-orbit of the
    subsystem's root set); the handful of classes meeting none of the
    modeled subgroups is solved from the exact inner-product relations
    between the coset permutation characters and the wedge characters.
3.  Irreducible characters come from a sieve over the characters induced
    from D8, A8 x <-1> and E7 x A1, the nine wedge powers, Adams
    operations, and tensor products, peeling off norm-1 remainders.

Everything is validated at the end: class sizes sum to |W|, the table is
square, and both orthogonality relations hold exactly.  Requires the E7
table (scripts/build_e7_table.py) to be built first.  Runs in roughly half
an hour.
"""

from __future__ import annotations

import argparse
import itertools
import random
import time
from fractions import Fraction
from math import prod

import numpy as np
import sympy

from cherednik.chartable import CharacterTable, check_orthogonality
from cherednik.dnchars import dn_combinatorial_table
from cherednik.chartable import sn_table
from cherednik.induction import (
    CosetModel,
    affine_deletion_subsystems,
    cheap_invariant,
    full_invariant,
    orbit_model,
    _negation_array,
)
from cherednik.labels import relabel
from cherednik.ratlinalg import char_poly
from cherednik.rootsystem import build_root_system
from cherednik.tableio import default_data_dir, load_table, save_table, validate_table
from cherednik.weylgroup import (
    enumerate_group,
    matrix_of,
    perm_order,
    simple_generators,
    word_from_action,
)


def log(msg: str) -> None:
    print(f"[{time.strftime('%H:%M:%S')}] {msg}", flush=True)


class Ambient:
    """Shared E8 data: root system, models, invariants."""

    def __init__(self):
        self.rs = build_root_system("E8")
        self.order = self.rs.weyl_order()
        self.neg = _negation_array(self.rs)
        self.gens = [
            np.array(g, dtype=np.int32) for g in simple_generators(self.rs)
        ]
        subs = affine_deletion_subsystems(self.rs)
        self.subs = {s.label: s for s in subs}
        self.models = {
            lbl: orbit_model(self.rs, self.subs[lbl].root_indices, lbl)
            for lbl in ("A1+E7", "D8", "A8")
        }
        self.model_list = [self.models[k] for k in ("A1+E7", "D8", "A8")]
        self._inv_cache: dict[bytes, tuple] = {}

    def perm_of_word(self, factor, word) -> np.ndarray:
        return np.array(
            factor.word_perm(self.rs, word), dtype=np.int32
        )

    def invariant(self, p: np.ndarray):
        key = p.astype(np.int32).tobytes()
        if key not in self._inv_cache:
            self._inv_cache[key] = full_invariant(
                self.rs, p, self.neg, self.model_list
            )
        return self._inv_cache[key]


# ---------------------------------------------------------------------------
# subgroup class data


class SubgroupData:
    """Classes of a subsystem subgroup (or its normalizer), each with an
    ambient representative, a centralizer order, and character values."""

    def __init__(self, label, class_perms, centralizers, irrep_rows):
        self.label = label
        self.class_perms = class_perms  # list of np arrays
        self.centralizers = centralizers  # |Z_H(h)| per class
        self.irrep_rows = irrep_rows  # list of value rows over the classes

    @property
    def order(self) -> int:
        total = sum(
            Fraction(1, z) for z in self.centralizers
        )
        # |H| = sum of class sizes = |H| * sum 1/z  ->  only a sanity hook
        return 0


def e7a1_data(amb: Ambient) -> SubgroupData:
    sub = amb.subs["A1+E7"]
    f_a1 = next(f for f in sub.factors if f.label == "A1")
    f_e7 = next(f for f in sub.factors if f.label == "E7")
    e7t = load_table(default_data_dir() / "e7.table")
    s_a1 = amb.perm_of_word(f_a1, (0,))
    ident = np.arange(240, dtype=np.int32)
    perms, cents = [], []
    for word, size in zip(e7t.class_words, e7t.class_sizes):
        p7 = amb.perm_of_word(f_e7, word)
        z7 = e7t.order // size
        for pa, in ((ident,), (s_a1,)):
            perms.append(pa[p7])
            cents.append(z7 * 2)
    rows = []
    for row in e7t.values:
        for eps in (1, -1):
            vals = []
            for v in row:
                vals.extend([v, eps * v])
            rows.append(vals)
    return SubgroupData("A1+E7", perms, cents, rows)


def d8_data(amb: Ambient) -> SubgroupData:
    sub = amb.subs["D8"]
    (f_d8,) = sub.factors
    t = dn_combinatorial_table(8)
    perms = [amb.perm_of_word(f_d8, w) for w in t.class_words]
    cents = [t.order // s for s in t.class_sizes]
    return SubgroupData("D8", perms, cents, [list(r) for r in t.values])


def a8_data(amb: Ambient) -> SubgroupData:
    """N(W(A8)) = W(A8) x <-1> = S9 x C2."""
    sub = amb.subs["A8"]
    (f_a8,) = sub.factors
    t = sn_table(9)
    minus = amb.neg.astype(np.int32)
    perms, cents, rows = [], [], []
    for word, size in zip(t.class_words, t.class_sizes):
        p = amb.perm_of_word(f_a8, word)
        z = t.order // size
        perms.extend([p, minus[p]])
        cents.extend([2 * z, 2 * z])
    for row in t.values:
        for eps in (1, -1):
            vals = []
            for v in row:
                vals.extend([v, eps * v])
            rows.append(vals)
    return SubgroupData("A8", perms, cents, rows)


def discovery_extras(amb: Ambient) -> list[np.ndarray]:
    """Class representatives of the remaining full-rank subsystems
    (discovery only): every non-sampled class should meet one of them."""
    out = []
    for lbl in ("A2+E6", "A4+A4", "A1+A7", "A1+A2+A5", "A3+D5"):
        sub = amb.subs[lbl]
        factor_reps = []
        for f in sub.factors:
            frs = build_root_system(f.type_label, f.rank) if f.type_label in "ABD" else build_root_system(f.label)
            g = enumerate_group(frs)
            words = [g.class_rep_word(c) for c in range(g.num_classes)]
            factor_reps.append([amb.perm_of_word(f, w) for w in words])
        for combo in itertools.product(*factor_reps):
            p = combo[0]
            for q in combo[1:]:
                p = p[q]
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# class discovery


def discover_classes(amb: Ambient, subgroups, extras, sample_rounds=400):
    ident = np.arange(240, dtype=np.int32)
    classes: dict = {}  # full invariant -> representative

    def add(p: np.ndarray) -> bool:
        """Register p's class and close under powers: several classes (the
        near-regular elliptic ones, e.g. the Phi_6^4 class of 4480 elements
        with centralizer order 155520) are far too small to hit by random
        sampling but arise as proper powers of large classes like the
        Coxeter class."""
        key = full_invariant(amb.rs, p, amb.neg, amb.model_list)
        if key in classes:
            return False
        classes[key] = p
        q = p[p]
        while not np.array_equal(q, ident):
            add(q)
            q = p[q]
        return True

    add(ident)
    for sd in subgroups:
        for p in sd.class_perms:
            add(p)
    for p in extras:
        add(p)
    log(f"{len(classes)} classes seeded from full-rank subsystems")

    rng = random.Random(20260823)
    quiet = 0
    rounds = 0
    batch = 256
    while quiet < sample_rounds and len(classes) < 112:
        rounds += 1
        ws = np.empty((batch, 240), dtype=np.int32)
        for i in range(batch):
            p = ident
            for _ in range(48):
                p = amb.gens[rng.randrange(8)][p]
            ws[i] = p
        fresh = 0
        for i in range(batch):
            # the full invariant (with characteristic polynomial) for every
            # sample: cheaper filters conflate some of the elliptic classes
            # that meet no proper full-rank subsystem
            if add(ws[i].copy()):
                fresh += 1
        quiet = 0 if fresh else quiet + 1
    log(f"{len(classes)} classes after sampling ({rounds} rounds)")
    # W(E8) has exactly 112 conjugacy classes; anything else means the
    # invariants conflated two classes somewhere.
    assert len(classes) == 112, f"found {len(classes)} classes, expected 112"
    return classes


# ---------------------------------------------------------------------------
# class sizes


def wedge_values_of(amb: Ambient, p: np.ndarray) -> list[Fraction]:
    poly = char_poly(matrix_of(amb.rs, tuple(int(e) for e in p)))
    return [(-1) ** ell * poly[8 - ell] for ell in range(9)]


def centralizer_orders(amb: Ambient, classes, subgroups):
    """|Z_W(g)| per class: coset fixed-point formula where some modeled
    subgroup meets the class, exact linear algebra for the rest."""
    inv_list = list(classes)
    index = {inv: i for i, inv in enumerate(inv_list)}
    n = len(inv_list)
    reps = [classes[inv] for inv in inv_list]

    fused: list[dict[int, list[int]]] = []  # per subgroup: class -> h indices
    for sd in subgroups:
        m: dict[int, list[int]] = {}
        for hi, p in enumerate(sd.class_perms):
            m.setdefault(index[amb.invariant(p)], []).append(hi)
        fused.append(m)

    pis = [
        [amb.models[sd.label].fixed_count(p) for p in reps]
        for sd in subgroups
    ]
    z = [None] * n
    for c in range(n):
        cands = []
        for si, sd in enumerate(subgroups):
            hs = fused[si].get(c, [])
            if not hs:
                assert pis[si][c] == 0, (
                    f"class {c} fixes cosets of {sd.label} but no subgroup "
                    "class fuses to it"
                )
                continue
            tot = sum(Fraction(1, sd.centralizers[h]) for h in hs)
            val = Fraction(pis[si][c]) / tot
            assert val.denominator == 1 and val > 0
            cands.append(int(val))
        if cands:
            assert len(set(cands)) == 1, f"inconsistent centralizer {cands}"
            z[c] = cands[0]
    known = [c for c in range(n) if z[c] is not None]
    unknown = [c for c in range(n) if z[c] is None]
    log(f"{len(known)} classes sized by subgroups, {len(unknown)} residual")
    if unknown:
        _solve_residual_sizes(amb, reps, z, unknown, pis, subgroups)
    sizes = [amb.order // z[c] for c in range(n)]
    assert sum(sizes) == amb.order, "class sizes do not sum to |W|"
    return inv_list, reps, sizes


def _solve_residual_sizes(amb, reps, z, unknown, pis, subgroups):
    """Solve the remaining class sizes from inner-product identities among
    the coset permutation characters and the wedge characters."""
    n = len(reps)
    wedges = [wedge_values_of(amb, p) for p in reps]
    funcs = [[w[ell] for w in wedges] for ell in range(9)]
    func_names = [f"w{ell}" for ell in range(9)]
    for si, sd in enumerate(subgroups):
        funcs.append([Fraction(v) for v in pis[si]])
        func_names.append(f"pi_{sd.label}")

    # exact inner products of the test functions
    gram: dict[tuple[int, int], Fraction] = {}
    for i in range(9):
        for j in range(i, 9):
            gram[(i, j)] = Fraction(1 if i == j else 0)
    for si, sd in enumerate(subgroups):
        hp = [wedge_values_of(amb, p) for p in sd.class_perms]
        for ell in range(9):
            gram[(ell, 9 + si)] = sum(
                (
                    Fraction(hv[ell], zh)
                    for hv, zh in zip(hp, sd.centralizers)
                ),
                Fraction(0),
            )
    for si in range(len(subgroups)):
        for sj in range(si, len(subgroups)):
            gram[(9 + si, 9 + sj)] = Fraction(
                _orbit_count(amb, subgroups[si], subgroups[sj])
            )

    nf = len(funcs)
    rows, rhs = [], []
    for i in range(nf):
        for j in range(i, nf):
            coeff = [funcs[i][c] * funcs[j][c] for c in range(n)]
            target = amb.order * gram[(i, j)]
            for c in range(n):
                if z[c] is not None:
                    target -= coeff[c] * (amb.order // z[c])
            rows.append([coeff[c] for c in unknown])
            rhs.append(target)
    a = sympy.Matrix([[sympy.Rational(e) for e in r] for r in rows])
    b = sympy.Matrix([sympy.Rational(e) for e in rhs])
    sol, params = a.gauss_jordan_solve(b)
    assert not params, "residual size system is underdetermined"
    for c, v in zip(unknown, sol):
        v = sympy.Rational(v)
        assert v.q == 1 and v > 0, f"non-integral class size {v}"
        size = int(v)
        assert amb.order % size == 0
        z[c] = amb.order // size
    log("residual sizes solved")


def _orbit_count(amb: Ambient, sd_h, sd_k) -> int:
    """Number of orbits of N(H) on the coset model of K."""
    model = amb.models[sd_k.label]
    gens = [
        model.action(amb.perm_of_word(f, (i,)).astype(np.int32))
        for f in amb.subs[sd_h.label].factors
        for i in range(f.rank)
    ]
    if sd_h.label == "A8":
        gens.append(model.action(amb.neg.astype(np.int32)))
    seen = np.zeros(model.size, dtype=bool)
    count = 0
    for start in range(model.size):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            x = stack.pop()
            for g in gens:
                y = int(g[x])
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return count


# ---------------------------------------------------------------------------
# character sieve


class Sieve:
    def __init__(self, amb, inv_list, reps, sizes):
        self.amb = amb
        self.n = len(reps)
        self.sizes = sizes
        self.index = {inv: i for i, inv in enumerate(inv_list)}
        self.reps = reps
        # power maps for Adams operations
        self.power_class: dict[int, list[int]] = {}
        self.irreps: list[tuple[int, ...]] = []
        self.pool: list[list[int]] = []

    def class_of_power(self, k: int) -> list[int]:
        if k not in self.power_class:
            out = []
            for p in self.reps:
                q = np.arange(240, dtype=np.int32)
                for _ in range(k):
                    q = p[q]
                out.append(self.index[self.amb.invariant(q)])
            self.power_class[k] = out
        return self.power_class[k]

    def inner(self, f, g) -> Fraction:
        tot = sum(
            s * a * b for s, a, b in zip(self.sizes, f, g)
        )
        return Fraction(tot, self.amb.order)

    def reduce_row(self, row) -> tuple[int, ...] | None:
        """Subtract known-irrep components; return the remainder or None."""
        r = list(row)
        for chi in self.irreps:
            m = self.inner(r, chi)
            assert m.denominator == 1, "non-integral multiplicity"
            if m:
                r = [a - int(m) * b for a, b in zip(r, chi)]
        if any(r):
            return tuple(r)
        return None

    def offer(self, row) -> bool:
        """Feed a virtual character; returns True if a new irrep appeared."""
        r = self.reduce_row(row)
        if r is None:
            return False
        nrm = self.inner(r, r)
        assert nrm.denominator == 1
        if nrm == 1:
            if r[0] < 0:
                r = tuple(-e for e in r)
            assert r[0] > 0
            self.irreps.append(r)
            self._drain()
            return True
        self.pool.append(list(r))
        return False

    def _drain(self) -> None:
        changed = True
        while changed:
            changed = False
            nxt = []
            for row in self.pool:
                r = self.reduce_row(row)
                if r is None:
                    continue
                if self.inner(r, r) == 1:
                    rr = tuple(-e for e in r) if r[0] < 0 else r
                    self.irreps.append(rr)
                    changed = True
                else:
                    nxt.append(list(r))
            self.pool = nxt

    def adams(self, row, k: int) -> list[int]:
        cp = self.class_of_power(k)
        return [row[c] for c in cp]

    def tensor(self, f, g) -> list[int]:
        return [a * b for a, b in zip(f, g)]


def induced_rows(amb, sieve, sd) -> list[list[int]]:
    fused: dict[int, list[int]] = {}
    for hi, p in enumerate(sd.class_perms):
        fused.setdefault(sieve.index[amb.invariant(p)], []).append(hi)
    zw = [Fraction(amb.order, s) for s in sieve.sizes]
    out = []
    for row in sd.irrep_rows:
        vals = []
        for c in range(sieve.n):
            tot = sum(
                (
                    Fraction(row[h], sd.centralizers[h])
                    for h in fused.get(c, [])
                ),
                Fraction(0),
            )
            v = zw[c] * tot
            assert v.denominator == 1, "non-integral induced value"
            vals.append(int(v))
        out.append(vals)
    return out


def gram_lll_extract(sieve: Sieve) -> bool:
    """Last-resort norm-1 search: LLL on the residual lattice with the
    character inner product as Gram matrix."""
    basis = _independent_residuals(sieve)
    if not basis:
        return False
    coeffs = _lll_gram(
        [[sieve.inner(a, b) for b in basis] for a in basis]
    )
    found = False
    for co in coeffs:
        vec = [
            sum(c * row[i] for c, row in zip(co, basis))
            for i in range(sieve.n)
        ]
        if any(vec) and sieve.inner(vec, vec) == 1:
            found |= sieve.offer(vec)
    return found


def _independent_residuals(sieve: Sieve) -> list[list[int]]:
    basis: list[list[int]] = []
    grams: list[list[Fraction]] = []
    for row in sieve.pool:
        r = sieve.reduce_row(row)
        if r is None:
            continue
        cand = basis + [list(r)]
        g = sympy.Matrix(
            [[sieve.inner(a, b) for b in cand] for a in cand]
        )
        if g.det() != 0:
            basis.append(list(r))
    return basis


def _lll_gram(gram) -> list[list[int]]:
    """LLL reduction coefficient vectors for a lattice given by its exact
    Gram matrix (characters are integral, so the Gram is integral)."""
    m = len(gram)
    g = sympy.Matrix([[sympy.Rational(e) for e in row] for row in gram])
    u = sympy.eye(m)

    def mu_and_b():
        # exact Gram-Schmidt data for the current basis u
        gg = u * g * u.T
        mu = sympy.zeros(m, m)
        bstar = [sympy.Rational(0)] * m
        for i in range(m):
            bstar[i] = gg[i, i]
            for j in range(i):
                mu[i, j] = (
                    gg[i, j]
                    - sum(mu[i, k] * mu[j, k] * bstar[k] for k in range(j))
                ) / bstar[j]
                bstar[i] -= mu[i, j] ** 2 * bstar[j]
        return mu, bstar

    k = 1
    mu, bstar = mu_and_b()
    guard = 0
    while k < m and guard < 10000:
        guard += 1
        for j in range(k - 1, -1, -1):
            q = sympy.Rational(mu[k, j]).round()
            if q:
                u[k, :] = u[k, :] - q * u[j, :]
                mu, bstar = mu_and_b()
        if bstar[k] >= (sympy.Rational(3, 4) - mu[k, k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            u[k, :], u[k - 1, :] = u[k - 1, :], u[k, :]
            mu, bstar = mu_and_b()
            k = max(k - 1, 1)
    return [[int(e) for e in u[i, :]] for i in range(m)]


# ---------------------------------------------------------------------------
# assembling the table


def name_and_order_classes(amb, sieve, reps, sizes):
    """Identity first, then by size and name; semantic names for the
    identity, reflection, and rank-2 product classes."""
    rs = amb.rs
    names = [None] * len(reps)
    ident = np.arange(240, dtype=np.int32)
    s0 = amb.gens[0]
    names[sieve.index[amb.invariant(ident)]] = "1"
    names[sieve.index[amb.invariant(s0[ident])]] = "A1"
    # a pair of orthogonal simples and a pair of adjacent ones
    from cherednik.ratlinalg import dot

    simples = rs.simple_roots
    for i in range(8):
        for j in range(i + 1, 8):
            p = amb.gens[i][amb.gens[j]]
            c = sieve.index[amb.invariant(p)]
            if names[c] is None:
                names[c] = "2A1" if dot(simples[i], simples[j]) == 0 else "A2"
    counter: dict[tuple[int, int], int] = {}
    for c in range(len(reps)):
        if names[c] is None:
            o = perm_order(tuple(int(e) for e in reps[c]))
            key = (o, sizes[c])
            counter[key] = counter.get(key, 0) + 1
            suffix = f"_{counter[key]}" if counter[key] > 1 else ""
            names[c] = f"o{o}s{sizes[c]}{suffix}"
    order = sorted(
        range(len(reps)), key=lambda c: (sizes[c] != 1, sizes[c], names[c])
    )
    return names, order


def build_table(amb, sieve, reps, sizes) -> CharacterTable:
    names, order = name_and_order_classes(amb, sieve, reps, sizes)
    assert len(sieve.irreps) == len(reps), "missing irreducibles"
    words = []
    for c in order:
        m = matrix_of(amb.rs, tuple(int(e) for e in reps[c]))
        words.append(word_from_action(amb.rs, lambda v: m.apply(v)))
    rows = sorted(
        ([int(r[c]) for c in order] for r in sieve.irreps),
        key=lambda r: (r[0], [-e for e in r]),
    )
    table = CharacterTable(
        group_label="E8",
        rs=amb.rs,
        class_names=[names[c] for c in order],
        class_sizes=[sizes[c] for c in order],
        class_words=words,
        irrep_labels=[f"r{i}" for i in range(len(rows))],
        values=rows,
    )
    check_orthogonality(table)
    ordered = sorted(
        range(len(rows)),
        key=lambda i: (rows[i][0], table.b_invariant(f"r{i}"), rows[i]),
    )
    labels = [None] * len(rows)
    seen: dict[tuple[int, int], int] = {}
    for i in ordered:
        d, b = rows[i][0], table.b_invariant(f"r{i}")
        seen[(d, b)] = seen.get((d, b), 0) + 1
        labels[i] = f"phi{{{d},{b}}}" + "'" * (seen[(d, b)] - 1)
    table.irrep_labels = labels
    table._cache.clear()
    return table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    out = args.out or default_data_dir() / "e8.table"

    amb = Ambient()
    log(f"ambient ready, |W| = {amb.order}")
    subgroups = [e7a1_data(amb), d8_data(amb), a8_data(amb)]
    log("subgroup class data ready: "
        + ", ".join(f"{s.label}:{len(s.class_perms)}" for s in subgroups))
    extras = discovery_extras(amb)
    classes = discover_classes(amb, subgroups, extras)
    log(f"{len(classes)} conjugacy classes")
    inv_list, reps, sizes = centralizer_orders(amb, classes, subgroups)
    log("class sizes done")

    sieve = Sieve(amb, inv_list, reps, sizes)
    wedges = list(zip(*(wedge_values_of(amb, p) for p in reps)))
    for w in wedges:
        assert all(Fraction(e).denominator == 1 for e in w)
        sieve.offer([int(e) for e in w])
    log(f"{len(sieve.irreps)} irreps after wedges")
    for sd in subgroups:
        for row in induced_rows(amb, sieve, sd):
            sieve.offer(row)
        log(f"{len(sieve.irreps)} irreps after inducing from {sd.label}")
    rounds = 0
    while len(sieve.irreps) < sieve.n and rounds < 6:
        rounds += 1
        known = list(sieve.irreps)
        for chi in known:
            for k in (2, 3, 5):
                sieve.offer(sieve.adams(chi, k))
        for i in range(len(known)):
            for j in range(i, len(known)):
                if known[i][0] * known[j][0] <= 60000:
                    sieve.offer(sieve.tensor(known[i], known[j]))
        log(f"{len(sieve.irreps)} irreps after tensor round {rounds} "
            f"(pool {len(sieve.pool)})")
        if len(sieve.irreps) < sieve.n:
            if gram_lll_extract(sieve):
                log(f"{len(sieve.irreps)} irreps after lattice reduction")

    table = build_table(amb, sieve, reps, sizes)
    relabel(table)
    validate_table(table)
    save_table(table, out)
    log(f"wrote {out}")


if __name__ == "__main__":
    main()
