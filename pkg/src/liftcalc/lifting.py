"""Lifting obstructions through central torus quotients.

The inputs are purely combinatorial: a based root datum with a chosen
torus extension of its center (a CentralQuotientData), and a family of
integral weights indexed by embedding labels.  Each label produces a
torsion class; lift decisions compare these classes across labels, with
the imaginary-field case delegating to the GL(1) feasibility criteria.
Archimedean parameter lifting and the L/C/W classification of parameters
run on the same lattices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cmdata import CMEmbeddingData, galois_char_feasible, validate_cm
from .intmat import InputError
from .rootdata import (
    BasedRootDatum,
    CentralQuotientData,
    center_characters,
    central_quotient_data,
    half_sum_positive_roots,
    longest_element_is_minus_one,
    minimal_torus_embed,
    simple_type,
)


@dataclass(frozen=True)
class HodgeFamily:
    """An integral weight mu_label in X(T) for every embedding label."""

    data: CMEmbeddingData
    mu: dict

    @staticmethod
    def make(data: CMEmbeddingData, mu) -> "HodgeFamily":
        diag = validate_cm(data)
        if diag != "ok":
            raise InputError(f"invalid embedding data: {diag}")
        mu = {l: tuple(int(x) for x in mu[l]) for l in data.labels}
        if set(mu) != set(data.labels):
            raise InputError("weight family must cover exactly the labels")
        return HodgeFamily(data, mu)


def obstruction_classes(cqd: CentralQuotientData, h: HodgeFamily) -> dict:
    """The torsion class (k_1 mod d_1, ..., k_r mod d_r) of each label's weight.

    With the center embedded in a torus, the reduction modulo the image
    of torsion from the big center is the identity, so the class is just
    the normalized torsion coordinate tuple of mu in X(Z_G).
    """
    out = {}
    for l in sorted(h.mu):
        mu = h.mu[l]
        if len(mu) != cqd.G.rank:
            raise InputError(f"weight at {l!r} has length {len(mu)}, expected {cqd.G.rank}")
        out[l] = cqd.theta(mu)
    return out


@dataclass(frozen=True)
class ObstructionReport:
    decision: str                    # "lift_exists" | "obstructed"
    mode: str
    moduli: tuple
    classes: dict                    # label -> torsion class tuple
    witness: dict | None             # label -> tuple of Fractions (central twist weights)
    certificate: tuple | None        # (label, label) with distinct classes
    purity_weights: tuple            # per coordinate: common w_i mod d_i, or None
    hodge_symmetric: bool            # all purity weights exist
    notes: tuple = ()

    def __post_init__(self):
        if (self.decision == "lift_exists") != (self.witness is not None):
            raise AssertionError("witness must accompany exactly the lift_exists decision")
        if (self.decision == "obstructed") != (self.certificate is not None):
            raise AssertionError("certificate must accompany exactly the obstructed decision")

    def to_json(self):
        wit = None
        if self.witness is not None:
            wit = {l: [str(t) for t in v] for l, v in self.witness.items()}
        return {
            "decision": self.decision,
            "mode": self.mode,
            "moduli": list(self.moduli),
            "classes": {l: list(v) for l, v in self.classes.items()},
            "witness": wit,
            "certificate": list(self.certificate) if self.certificate else None,
            "purity_weights": [w if w is not None else None for w in self.purity_weights],
            "hodge_symmetric": self.hodge_symmetric,
            "notes": list(self.notes),
        }


def geometric_lift_exists(cqd: CentralQuotientData, h: HodgeFamily, mode: str) -> ObstructionReport:
    """Decide geometric liftability of the weight family through the quotient.

    totally_real: coordinates with odd modulus never obstruct; the lift
    exists iff the even-modulus coordinates are label-independent.
    imaginary: each coordinate family must factor through the CM
    restriction and admit a purity weight; the witness twists come from
    the GL(1) construction.
    """
    if mode not in ("totally_real", "imaginary"):
        raise InputError(f"unknown mode {mode!r}")
    if mode == "totally_real" and h.data.mode != "totally_real":
        raise InputError("totally_real decision on non-totally-real embedding data")
    if mode == "imaginary" and h.data.mode == "totally_real":
        raise InputError("imaginary decision on totally real embedding data")
    classes = obstruction_classes(cqd, h)
    labels = sorted(classes)
    d = cqd.d
    notes = []

    if mode == "totally_real":
        even_idx = [i for i, di in enumerate(d) if di % 2 == 0]
        cert = None
        for a, b in zip(labels, labels[1:]):
            if any(classes[a][i] != classes[b][i] for i in even_idx):
                cert = (a, b)
                break
        purity = []
        for i, di in enumerate(d):
            doubled = {(2 * classes[l][i]) % di for l in labels}
            purity.append(next(iter(doubled)) if len(doubled) == 1 else None)
        symmetric = all(w is not None for w in purity)
        if cert is not None:
            return ObstructionReport(
                "obstructed", mode, d, classes, None, cert, tuple(purity), symmetric)
        if not symmetric:
            notes.append("odd-modulus coordinates vary across labels; the emitted twist "
                         "family is only realizable under the Hodge symmetry assumption")
        witness = {l: tuple(Fraction(classes[l][i], d[i]) for i in range(len(d)))
                   for l in labels}
        return ObstructionReport(
            "lift_exists", mode, d, classes, witness, None, tuple(purity), symmetric,
            tuple(notes))

    # imaginary mode: per coordinate, delegate to the GL(1) criterion
    purity = []
    families = []
    for i, di in enumerate(d):
        k = {l: classes[l][i] for l in labels}
        res = galois_char_feasible(h.data, di, k)
        if res is None:
            purity.append(None)
            families.append(None)
        else:
            purity.append(res.purity_weight)
            families.append(res.weights)
    if all(f is not None for f in families):
        witness = {l: tuple(families[i][l] for i in range(len(d))) for l in labels}
        return ObstructionReport(
            "lift_exists", mode, d, classes, witness, None, tuple(purity), True)
    cert = None
    for a, b in zip(labels, labels[1:]):
        if classes[a] != classes[b]:
            cert = (a, b)
            break
    if cert is None:
        # constant classes are always feasible, so infeasibility implies a
        # differing pair somewhere in the sorted order
        for a in labels:
            for b in labels:
                if classes[a] != classes[b]:
                    cert = (a, b)
                    break
            if cert:
                break
    if cert is None:
        raise AssertionError("infeasible imaginary instance with constant classes")
    return ObstructionReport(
        "obstructed", mode, d, classes, None, cert, tuple(purity), False)


def twist_by_witness(cqd: CentralQuotientData, h: HodgeFamily, witness: dict) -> HodgeFamily:
    """Apply a central twist family: mu' = mu - sum_i (d_i t_i) u_i.

    u_i is the stored lift to X(T) of the i-th torsion basis class, so
    the twisted family has torsion classes k_i - d_i t_i mod d_i.
    """
    new_mu = {}
    for l, mu in h.mu.items():
        t = witness[l]
        shift = [0] * cqd.G.rank
        for i in range(cqd.r):
            c = t[i] * cqd.d[i]
            if c.denominator != 1:
                raise InputError("twist weights must clear the moduli denominators")
            for j in range(cqd.G.rank):
                shift[j] += int(c) * cqd.torsion_lifts[i][j]
        new_mu[l] = tuple(m - s for m, s in zip(mu, shift))
    return HodgeFamily(h.data, new_mu)


# ---------------------------------------------------------------------------
# the simple-type classification table


@dataclass(frozen=True)
class SimpleTypeRow:
    name: str
    d: tuple
    two_torsion: tuple
    obstruction_possible: bool
    discrete_series_available: bool
    automorphic_counterexample: bool

    def to_json(self):
        return {
            "type": self.name,
            "d": list(self.d),
            "two_torsion": list(self.two_torsion),
            "obstruction_possible": self.obstruction_possible,
            "discrete_series_available": self.discrete_series_available,
            "automorphic_counterexample": self.automorphic_counterexample,
        }


def classify_simple_types(max_rank: int = 8) -> list:
    """Lifting-obstruction classification of all simply connected simple types.

    Every entry is computed: invariant factors via Smith normal form of
    the root-lattice inclusion, 2-torsion from them, and the discrete
    series flag from whether the longest Weyl element is -1.  Obstruction
    is possible exactly when the 2-torsion is nontrivial, and the
    counterexample flag marks types where a discrete-series construction
    can realize it.
    """
    types = []
    for n in range(1, max_rank + 1):
        types.append(("A", n))
    for n in range(2, max_rank + 1):
        types.append(("B", n))
        types.append(("C", n))
    for n in range(4, max_rank + 1):
        types.append(("D", n))
    for n in (6, 7, 8):
        if n <= max_rank:
            types.append(("E", n))
    if max_rank >= 4:
        types.append(("F", 4))
    if max_rank >= 2:
        types.append(("G", 2))
    rows = []
    for family, rank in types:
        rd = simple_type(family, rank, "sc")
        cqd = central_quotient_data(rd, minimal_torus_embed(rd))
        center = center_characters(rd).group
        if cqd.d != center.invariant_factors:
            raise AssertionError("normalized invariant factors disagree with the center")
        two = center.two_torsion()
        obstruction = not two.is_trivial
        ds = longest_element_is_minus_one(rd)
        rows.append(SimpleTypeRow(
            name=f"{family}{rank}",
            d=cqd.d,
            two_torsion=two.invariant_factors,
            obstruction_possible=obstruction,
            discrete_series_available=ds,
            automorphic_counterexample=obstruction and ds,
        ))
    return rows


# ---------------------------------------------------------------------------
# archimedean parameters


@dataclass(frozen=True)
class ParameterPair:
    mu: tuple
    nu: tuple

    @staticmethod
    def make(mu, nu) -> "ParameterPair":
        mu = tuple(Fraction(x) for x in mu)
        nu = tuple(Fraction(x) for x in nu)
        if len(mu) != len(nu):
            raise InputError("parameter components differ in length")
        if any((a - b).denominator != 1 for a, b in zip(mu, nu)):
            raise InputError("mu - nu must be an integral weight")
        return ParameterPair(mu, nu)


def _integral(vec) -> bool:
    return all(Fraction(x).denominator == 1 for x in vec)


def algebraicity_class(rd: BasedRootDatum, p: ParameterPair) -> frozenset:
    """Which of the L / C / W integrality classes the pair satisfies."""
    if len(p.mu) != rd.rank:
        raise InputError("parameter length does not match the rank")
    out = set()
    if _integral(p.mu) and _integral(p.nu):
        out.add("L")
    rho = half_sum_positive_roots(rd)
    if _integral(tuple(a - b for a, b in zip(p.mu, rho))) and \
       _integral(tuple(a - b for a, b in zip(p.nu, rho))):
        out.add("C")
    if _integral(tuple(2 * a for a in p.mu)) and _integral(tuple(2 * a for a in p.nu)):
        out.add("W")
    return frozenset(out)


@dataclass(frozen=True)
class LiftedParameter:
    label: str
    mu: tuple                 # X(T) part, Fractions
    nu: tuple
    mu_central: tuple         # X(Ztilde) part in the original basis, Fractions
    nu_central: tuple
    classes: frozenset        # L/C/W classes of the lifted pair


@dataclass(frozen=True)
class ParameterLiftReport:
    recipe: str
    lifted: tuple             # LiftedParameter per label, sorted
    input_classes: dict
    l_lift_exists: bool
    w_lift_exists: bool
    two_torsion_images: dict  # label -> torsion class of mu - nu

    def to_json(self):
        return {
            "recipe": self.recipe,
            "lifted": [{
                "label": lp.label,
                "mu": [str(x) for x in lp.mu],
                "nu": [str(x) for x in lp.nu],
                "mu_central": [str(x) for x in lp.mu_central],
                "nu_central": [str(x) for x in lp.nu_central],
                "classes": sorted(lp.classes),
            } for lp in self.lifted],
            "input_classes": {l: sorted(v) for l, v in self.input_classes.items()},
            "l_lift_exists": self.l_lift_exists,
            "w_lift_exists": self.w_lift_exists,
            "two_torsion_images": {l: list(v) for l, v in self.two_torsion_images.items()},
        }


def _extended_classes(cqd: CentralQuotientData, mu, nu, mu_c, nu_c) -> frozenset:
    """L/C/W classes of a lifted pair against the extended character lattice."""
    out = set()
    if cqd.pair_in_extended_lattice(mu, mu_c) and cqd.pair_in_extended_lattice(nu, nu_c):
        out.add("L")
    rho = half_sum_positive_roots(cqd.G)
    mu_s = tuple(a - b for a, b in zip(mu, rho))
    nu_s = tuple(a - b for a, b in zip(nu, rho))
    if cqd.pair_in_extended_lattice(mu_s, mu_c) and cqd.pair_in_extended_lattice(nu_s, nu_c):
        out.add("C")
    if cqd.pair_in_extended_lattice(tuple(2 * a for a in mu), tuple(2 * a for a in mu_c)) and \
       cqd.pair_in_extended_lattice(tuple(2 * a for a in nu), tuple(2 * a for a in nu_c)):
        out.add("W")
    return frozenset(out)


def lift_archimedean_parameter(cqd: CentralQuotientData, params: dict, recipe: str,
                               tempered: bool = True) -> ParameterLiftReport:
    """Lift archimedean parameters to the extended group.

    cm_typeA: the central component carries half the difference class,
    chosen so integral (L-algebraic) inputs lift to integral parameters.
    finite_order: the central component is zero; the report carries the
    verdict that an integral lift exists iff the 2-torsion images of the
    parameters agree across all labels.
    """
    if recipe not in ("cm_typeA", "finite_order"):
        raise InputError(f"unknown recipe {recipe!r}")
    rd = cqd.G
    labels = sorted(params)
    pairs = {l: params[l] for l in labels}
    for l, p in pairs.items():
        if len(p.mu) != rd.rank:
            raise InputError(f"parameter at {l!r} does not match the rank")
        if tempered and any(a + b != 0 for a, b in zip(p.mu, p.nu)):
            raise InputError(f"tempered flag inconsistent with mu + nu != 0 at {l!r}")

    input_classes = {l: algebraicity_class(rd, p) for l, p in pairs.items()}
    images = {}
    lifted = []
    m = cqd.ztilde_rank
    for l in labels:
        p = pairs[l]
        diff = tuple(a - b for a, b in zip(p.mu, p.nu))
        diff_int = tuple(int(x) for x in diff)
        images[l] = cqd.theta(diff_int)
        if recipe == "finite_order":
            mu_c = (Fraction(0),) * m
            nu_c = (Fraction(0),) * m
        else:
            if _integral(p.mu):
                ks = [Fraction(k) for k in cqd.theta(tuple(int(x) for x in p.mu))]
            else:
                ks = [Fraction(k, 2) for k in images[l]]
            coeffs = [Fraction(0)] * m
            for i in range(cqd.r):
                w = cqd.basis_change.col(i)
                for j in range(m):
                    coeffs[j] += ks[i] * w[j]
            mu_c = tuple(coeffs)
            nu_c = tuple(-c for c in coeffs)
        classes = _extended_classes(cqd, p.mu, p.nu, mu_c, nu_c)
        lifted.append(LiftedParameter(l, p.mu, p.nu, mu_c, nu_c, classes))

    if recipe == "cm_typeA":
        # the produced lift is the answer over CM data
        l_exists = all("L" in lp.classes for lp in lifted)
    else:
        # integral lift exists iff the 2-torsion images agree across labels
        l_exists = len({images[l] for l in labels}) <= 1
    w_exists = all(
        _integral(tuple(2 * a for a in p.mu)) and _integral(tuple(2 * a for a in p.nu))
        for p in pairs.values())
    return ParameterLiftReport(
        recipe=recipe,
        lifted=tuple(lifted),
        input_classes=input_classes,
        l_lift_exists=l_exists,
        w_lift_exists=w_exists,
        two_torsion_images=images,
    )
