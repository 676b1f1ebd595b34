"""Classification of the W-representations that extend to modules on which
both polynomial halves of the t=0 Cherednik algebra act by zero.

The criterion: sigma extends iff chi_sigma([y, x_i]^2) = 0 for the two probe
commutators, where [y, x] is the formal reflection sum with coefficient
<y, alpha><alpha_v, x> c_alpha on s_alpha.  Squares are grouped by the
conjugacy class of s_alpha s_beta (named by the rank-2 subsystem the pair
generates), with coefficients homogeneous quadratics in (c_long, c_short).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartable import CharacterTable
from .partitions import Partition, partitions_of, transpose
from .ratlinalg import (
    ALL,
    CS_ZERO,
    NONE,
    ConstraintSet,
    ParamQuad,
    QuadNum,
    Vector,
    dot,
    quad_solve,
)
from .rootsystem import (
    LONG,
    RootSystem,
    build_root_system,
    rank2_label,
    test_vectors,
)
from .weylgroup import (
    Perm,
    compose,
    matrix_of,
    perm_order,
    root_permutation,
    word_to_perm,
)

IDENTITY_LABEL = "1"


def commutator_sum(rs: RootSystem, y: Vector, x: Vector) -> dict[Vector, Fraction]:
    """Nonzero coefficients <y, alpha><alpha_v, x> per positive root.

    The parameter factor c_alpha stays implicit: it is determined by the
    length class of the root.
    """
    out = {}
    for a in rs.positive_roots:
        c = dot(y, a) * dot(rs.coroot(a), x)
        if c:
            out[a] = c
    return out


@dataclass(frozen=True)
class GroupedSquare:
    """[y,x]^2 grouped by conjugacy class of s_alpha s_beta.

    ``coeffs`` maps a class label (IDENTITY_LABEL or a rank-2 label, with
    primes if a label splits into several classes) to the exact quadratic
    (a, b, d) = coefficients of (c_long^2, c_long*c_short, c_short^2).
    ``reps`` holds one representative root pair per label.
    """

    coeffs: dict[str, tuple[Fraction, Fraction, Fraction]]
    reps: dict[str, tuple[Vector, Vector] | None]

    def quads(self) -> dict[str, ParamQuad]:
        out = {}
        for label, (a, b, d) in self.coeffs.items():
            denom = a.denominator
            for e in (b, d):
                denom = denom * e.denominator // _gcd(denom, e.denominator)
            out[label] = ParamQuad(
                int(a * denom), int(b * denom), int(d * denom)
            )
        return out


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _perm_invariant(rs: RootSystem, p: Perm):
    """Cheap conjugation invariant separating the classes we group by:
    per power, the number of fixed roots in each length class, plus the
    reflection-representation trace."""
    n = len(p)
    lengths = [rs.length_class(a) for a in rs.all_roots]
    fixed = []
    q = p
    for _ in range(perm_order(p)):
        fl = sum(1 for i in range(n) if q[i] == i and lengths[i] == LONG)
        fs = sum(1 for i in range(n) if q[i] == i and lengths[i] != LONG)
        fixed.append((fl, fs))
        q = compose(q, p)
    trace = matrix_of(rs, p).trace()
    return (tuple(fixed), trace)


def square_and_group(
    rs: RootSystem, terms: dict[Vector, Fraction]
) -> GroupedSquare:
    """Group the square of a commutator sum by conjugacy class."""
    roots = sorted(terms)
    perms = {a: root_permutation(rs, a) for a in roots}
    coeffs: dict[str, list[Fraction]] = {}
    reps: dict[str, tuple[Vector, Vector] | None] = {}
    invariants: dict[str, object] = {}

    def add(label: str, a: Vector, b: Vector, quad_slot: int, val: Fraction):
        if label not in coeffs:
            coeffs[label] = [Fraction(0)] * 3
            reps[label] = None if label == IDENTITY_LABEL else (a, b)
            if label != IDENTITY_LABEL:
                invariants[label] = _perm_invariant(
                    rs, compose(perms[a], perms[b])
                )
        elif label != IDENTITY_LABEL:
            inv = _perm_invariant(rs, compose(perms[a], perms[b]))
            if inv != invariants[label]:
                raise AssertionError(
                    f"label {label} covers non-conjugate products"
                )
        coeffs[label][quad_slot] += val

    def slot(la: str, lb: str) -> int:
        # index into (c_long^2, c_long*c_short, c_short^2)
        longs = (la == LONG) + (lb == LONG)
        return {2: 0, 1: 1, 0: 2}[longs]

    for i, a in enumerate(roots):
        ka, la = terms[a], rs.length_class(a)
        add(IDENTITY_LABEL, a, a, slot(la, la), ka * ka)
        for b in roots[i + 1 :]:
            kb, lb = terms[b], rs.length_class(b)
            label = rank2_label(rs, a, b)
            add(label, a, b, slot(la, lb), 2 * ka * kb)
    return GroupedSquare(
        coeffs={k: tuple(v) for k, v in coeffs.items()}, reps=reps
    )


# ---------------------------------------------------------------------------
# matching grouped-square labels to table classes


def _class_column(table: CharacterTable, rs: RootSystem, gs: GroupedSquare) -> dict[str, int]:
    """Map each grouped-square label to a class index of the table."""
    out = {}
    table_inv = None
    group = None
    for label, pair in gs.reps.items():
        if pair is None:
            out[label] = 0
            continue
        if label in table.class_names:
            out[label] = table.class_index(label)
            continue
        if table_inv is None:
            table_inv = {}
            for c, word in enumerate(table.class_words):
                key = _perm_invariant(rs, word_to_perm(rs, word))
                table_inv.setdefault(key, []).append(c)
        p = compose(
            root_permutation(rs, pair[0]), root_permutation(rs, pair[1])
        )
        candidates = table_inv[_perm_invariant(rs, p)]
        if len(candidates) == 1:
            out[label] = candidates[0]
            continue
        # invariants are ambiguous (e.g. the triality-related involution
        # classes of D4): settle it by exact conjugacy in the full group
        if group is None:
            from .weylgroup import enumerate_group

            group = enumerate_group(rs)
        cls = group.class_index_of_perm(p)
        out[label] = next(
            c
            for c in candidates
            if group.class_index_of_perm(
                word_to_perm(rs, table.class_words[c])
            )
            == cls
        )
    return out


def normalized_class_sums(
    table: CharacterTable, gs: GroupedSquare, rs: RootSystem | None = None
) -> dict[str, tuple[int, int, int]]:
    """Grouped square with labels merged by actual conjugacy class of the
    table and coefficients divided by their content (so the identity entry
    is in lowest integer terms)."""
    rs = rs or table.rs
    cols = _class_column(table, rs, gs)
    acc: dict[str, list[Fraction]] = {}
    for label, quad in gs.coeffs.items():
        name = table.class_names[cols[label]]
        tgt = acc.setdefault(name, [Fraction(0)] * 3)
        for i in range(3):
            tgt[i] += quad[i]
    denom = 1
    for quad in acc.values():
        for e in quad:
            denom = denom * e.denominator // _gcd(denom, e.denominator)
    content = 0
    for quad in acc.values():
        for e in quad:
            content = _gcd(content, int(e * denom))
    return {
        name: tuple(int(e * denom) // content for e in quad)
        for name, quad in acc.items()
    }


def vanishing_constraints(
    table: CharacterTable,
    label: str,
    gs1: GroupedSquare,
    gs2: GroupedSquare,
    rs: RootSystem | None = None,
) -> ConstraintSet:
    """Exact parameter locus where both grouped squares kill chi_sigma."""
    rs = rs or table.rs
    row = table.row(label)
    quads = []
    for gs in (gs1, gs2):
        cols = _class_column(table, rs, gs)
        acc = [Fraction(0)] * 3
        for lb, (a, b, d) in gs.coeffs.items():
            chi = row[cols[lb]]
            acc[0] += a * chi
            acc[1] += b * chi
            acc[2] += d * chi
        denom = 1
        for e in acc:
            denom = denom * e.denominator // _gcd(denom, e.denominator)
        quads.append(
            ParamQuad.make(
                int(acc[0] * denom), int(acc[1] * denom), int(acc[2] * denom)
            )
        )
    return quad_solve(quads[0], quads[1])


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassificationEntry:
    label: str
    constraints: ConstraintSet


@dataclass(frozen=True)
class ClassificationResult:
    group_label: str
    entries: tuple[ClassificationEntry, ...]

    def labels_at(self, ratio) -> list[str]:
        """Labels admissible at the parameter point c_short/c_long = ratio
        (INFINITE_RATIO for c_long = 0)."""
        return [
            e.label
            for e in self.entries
            if e.constraints.contains_ratio(ratio)
        ]


def classify_exceptional(table: CharacterTable) -> ClassificationResult:
    rs = table.rs
    from .weylgroup import reduction_hypotheses

    tv = test_vectors(rs.type_label, rs.rank)
    rep = reduction_hypotheses(rs, tv)
    assert rep.cond_a and rep.cond_b, "probe vectors fail the span hypotheses"
    gs1 = square_and_group(rs, commutator_sum(rs, tv.y, tv.x1))
    gs2 = square_and_group(rs, commutator_sum(rs, tv.y, tv.x2))
    entries = []
    for label in table.irrep_labels:
        cset = vanishing_constraints(table, label, gs1, gs2, rs)
        if cset.kind == NONE:
            continue
        if not rs.two_lengths and cset.kind != ALL:
            # single length class: the only non-generic locus is the
            # degenerate parameter c = 0, where everything extends
            continue
        entries.append(ClassificationEntry(label, cset))
    return ClassificationResult(table.group_label, tuple(entries))


def classify_bn(n: int) -> ClassificationResult:
    """Type B_n by the rectangle rule: (lambda)x(0) and (0)x(lambda^t) for
    lambda a k x d rectangle with k - d = c_short/c_long."""
    entries = []
    for lam in partitions_of(n):
        if len(set(lam.parts)) != 1:
            continue
        k, d = len(lam.parts), lam.parts[0]
        cset = ConstraintSet.from_points(frozenset({QuadNum.make(k - d)}))
        entries.append(ClassificationEntry(f"{lam}x(0)", cset))
        entries.append(ClassificationEntry(f"(0)x{transpose(lam)}", cset))
    entries.sort(key=lambda e: e.label)
    return ClassificationResult(f"B{n}", tuple(entries))


def classify_dn(n: int) -> ClassificationResult:
    """Type D_n by the rectangle rule: (lambda)x(0) with lambda = d x d and
    n = d^2, for every nonzero (single) parameter."""
    entries = []
    for lam in partitions_of(n):
        if len(set(lam.parts)) != 1:
            continue
        k, d = len(lam.parts), lam.parts[0]
        if k != d:
            continue
        entries.append(
            ClassificationEntry(f"{lam}x(0)", ConstraintSet(ALL))
        )
    return ClassificationResult(f"D{n}", tuple(entries))


# ---------------------------------------------------------------------------
# independent matrix-level criterion via the regular representation


def character_criterion(
    table: CharacterTable,
    label: str,
    gs1: GroupedSquare,
    gs2: GroupedSquare,
    cl: Fraction,
    cs: Fraction,
    rs: RootSystem | None = None,
) -> bool:
    """Whether chi_sigma([y, x_i]^2) = 0 for i = 1, 2 at numeric (cl, cs)."""
    rs = rs or table.rs
    row = table.row(label)
    for gs in (gs1, gs2):
        cols = _class_column(table, rs, gs)
        tot = Fraction(0)
        for lb, (a, b, d) in gs.coeffs.items():
            tot += (a * cl * cl + b * cl * cs + d * cs * cs) * row[cols[lb]]
        if tot:
            return False
    return True


def matrix_criterion_bulk(
    group, table: CharacterTable, cl: Fraction, cs: Fraction
) -> dict[str, bool]:
    """matrix_criterion for every irrep at once, vectorized over W.

    sigma([y, x_i]) = 0 iff chi(sum_a k_a c_a s_a w) = 0 for every w in W
    (trace-form nondegeneracy); the class of s_a w is precomputed for all
    w with numpy, so each irrep costs one integer matrix-vector pass.
    """
    import numpy as np

    rs = group.rs
    tv = test_vectors(rs.type_label, rs.rank)
    nroots = len(rs.all_roots)
    elems = np.frombuffer(
        b"".join(group.elements), dtype=np.uint8
    ).reshape(group.order, nroots)
    # align table classes with the enumerated classes
    tcol = [0] * group.num_classes
    seen = set()
    for c, word in enumerate(table.class_words):
        e = group.class_index_of_perm(word_to_perm(rs, word))
        tcol[e] = c
        seen.add(e)
    if len(seen) != table.num_classes:
        raise AssertionError("table classes do not match the enumerated group")

    out = {label: True for label in table.irrep_labels}
    for x in (tv.x1, tv.x2):
        terms = commutator_sum(rs, tv.y, x)
        weights = []
        cls_vecs = []
        denom = 1
        for a, k in sorted(terms.items()):
            c_par = cl if rs.length_class(a) == LONG else cs
            w = k * c_par
            denom = denom * w.denominator // _gcd(denom, w.denominator)
            weights.append(w)
        for a in sorted(terms):
            pa = np.array(root_permutation(rs, a), dtype=np.int64)
            composed = pa[elems]  # row w -> permutation s_a o w
            cls = np.empty(group.order, dtype=np.int64)
            for i in range(group.order):
                cls[i] = group.class_of[group.index[composed[i].astype(np.uint8).tobytes()]]
            cls_vecs.append(cls)
        iweights = [int(w * denom) for w in weights]
        for label in table.irrep_labels:
            if not out[label]:
                continue
            row = table.row(label)
            vals = np.array(
                [row[tcol[c]] for c in range(group.num_classes)],
                dtype=np.int64,
            )
            tot = np.zeros(group.order, dtype=np.int64)
            for w, cls in zip(iweights, cls_vecs):
                if w:
                    tot += w * vals[cls]
            if np.any(tot):
                out[label] = False
    return out


def matrix_criterion(
    group, table: CharacterTable, label: str, cl: Fraction, cs: Fraction
) -> bool:
    """Whether sigma([y, x_i]) = 0 for i = 1, 2 at numeric parameters,
    decided without constructing sigma: sigma(A) = 0 iff chi(A w) = 0 for
    every w in W (trace-form nondegeneracy on the full matrix algebra).

    ``group`` is the EnumeratedGroup; the table's classes must match it.
    """
    rs = group.rs
    tv = test_vectors(rs.type_label, rs.rank)
    row = table.row(label)
    # align table classes with enumerated classes via invariants
    tinv = {}
    for c, word in enumerate(table.class_words):
        p = word_to_perm(rs, word)
        tinv[group.class_index_of_perm(p)] = c
    if len(tinv) != table.num_classes:
        raise AssertionError("table classes do not match the enumerated group")
    for x in (tv.x1, tv.x2):
        terms = commutator_sum(rs, tv.y, x)
        weighted = []
        for a, k in terms.items():
            c_par = cl if rs.length_class(a) == LONG else cs
            weighted.append((root_permutation(rs, a), k * c_par))
        for w in range(group.order):
            pw = group.perm(w)
            tot = Fraction(0)
            for pa, coeff in weighted:
                cls = group.class_of[group.index[bytes(compose(pa, pw))]]
                tot += coeff * row[tinv[int(cls)]]
            if tot:
                return False
    return True
