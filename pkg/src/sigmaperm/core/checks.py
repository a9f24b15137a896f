"""Decision procedures for σ-nilpotency, σ-solubility, σ-subnormality and
σ-p-permutability of sections and subgroups."""

import logging
from typing import Iterable, Optional

from ..config import Config, resolve_config
from ..errors import NotSigmaSolubleError, PartitionError, PreconditionError
from ..models.partition import Partition
from ..models.reports import CheckReport
from ..utils.primes import PrimeTools
from .decomposition import decompose_generators
from .stab_chain import PermGroup, check_chain_length
from .toolbox import (
    ChiefSeries,
    Section,
    chief_series,
    core,
    is_normal_in,
    join,
    normal_closure,
    o_upper_pi,
)


logger = logging.getLogger(__name__)


def fit_partition(
    sigma: Partition, needed: Iterable[int], ambient: Iterable[int]
) -> Partition:
    """
    Bring σ onto the prime set ``ambient``.

    σ must cover ``needed``. Primes of σ outside ``ambient`` are dropped and
    primes of ``ambient`` missing from σ become singleton blocks; the latter
    only ever divide the order of the normal subgroup being factored out, so
    their placement does not affect any verdict.

    Raises:
        PartitionError: If σ does not cover ``needed``
    """
    needed, ambient = frozenset(needed), frozenset(ambient)
    missing = needed - sigma.ground
    if missing:
        raise PartitionError(f"partition does not cover primes {sorted(missing)}")
    return sigma.restrict(sigma.ground & ambient).extend(ambient)


def _check_triple(g: PermGroup, h: PermGroup, k: PermGroup) -> None:
    if not k.is_subgroup(h):
        raise PreconditionError("K is not contained in H")
    if not h.is_subgroup(g):
        raise PreconditionError("H is not contained in G")
    if not is_normal_in(k, g):
        raise PreconditionError("K is not normal in G")


def _group_primes(g: PermGroup) -> frozenset[int]:
    return PrimeTools.prime_set(g.order())


def is_sigma_nilpotent(
    s: Section, sigma: Partition, config: Optional[Config] = None
) -> CheckReport:
    """
    Decide whether G/K is σ-nilpotent.

    G's generators are split into σ_i-elements (the primes dividing only |K|
    go to an extra bucket, whose elements lie in K). G/K is σ-nilpotent iff
    every ⟨S_i⟩K/K is a σ_i-group and every commutator [s_i, s_j] across
    different blocks lies in K.
    """
    primes = s.primes()
    if not primes:
        return CheckReport.holds()
    sigma = fit_partition(sigma, primes, primes)
    k = s.small
    k_order = k.order()
    parts = decompose_generators(
        s.big, sigma, _group_primes(s.big) - primes
    )

    for block in sigma.blocks:
        piece = join(PermGroup(s.degree, parts[block]), k)
        label = PrimeTools.prime_set(piece.order() // k_order)
        if not label <= frozenset(block):
            return CheckReport.fails(
                "label", block=list(block), primes=sorted(label)
            )

    blocks = sigma.blocks
    for i, left in enumerate(blocks):
        for right in blocks[i + 1 :]:
            for a in parts[left]:
                for b in parts[right]:
                    if not k.contains(a.commutator(b)):
                        return CheckReport.fails(
                            "commutator",
                            blocks=[list(left), list(right)],
                            left=str(a),
                            right=str(b),
                        )
    return CheckReport.holds()


def soluble_verdict(series: ChiefSeries, sigma: Partition) -> CheckReport:
    """σ-solubility read off an already computed chief series."""
    for index, primes in enumerate(series.factor_prime_sets):
        if not any(primes <= frozenset(b) for b in sigma.blocks):
            return CheckReport.fails(
                "chief_factor",
                index=index,
                order=series.factor_orders[index],
                primes=sorted(primes),
            )
    return CheckReport.holds()


def is_sigma_soluble(
    s: Section, sigma: Partition, config: Optional[Config] = None
) -> CheckReport:
    """Decide whether every chief factor of G through K is a σ_i-group."""
    primes = s.primes()
    if not primes:
        return CheckReport.holds()
    sigma = fit_partition(sigma, primes, primes)
    return soluble_verdict(chief_series(s, config), sigma)


def is_sigma_subnormal(
    g: PermGroup,
    h: PermGroup,
    k: PermGroup,
    sigma: Partition,
    config: Optional[Config] = None,
) -> CheckReport:
    """
    Decide whether H/K is σ-subnormal in G/K.

    Works on H in G directly. The ambient group A shrinks while H stays
    fixed: to H^A when that is proper, otherwise to H·O^{σ_i}(A) for the
    first block σ_i meeting π(|A:H|) that gives a proper subgroup. H is
    σ-subnormal iff A reaches H.
    """
    config = resolve_config(config)
    _check_triple(g, h, k)
    quotient_primes = Section(g, k, check=False).primes()
    sigma = fit_partition(sigma, quotient_primes, _group_primes(g))

    ambient = g
    steps = 0
    h_order = h.order()
    while ambient.order() != h_order:
        closure = normal_closure(ambient, h)
        if closure.order() < ambient.order():
            ambient = closure
        else:
            index_primes = PrimeTools.prime_set(ambient.order() // h_order)
            for block in sigma.blocks:
                if not index_primes & frozenset(block):
                    continue
                candidate = join(h, o_upper_pi(ambient, block, config))
                if candidate.order() < ambient.order():
                    ambient = candidate
                    break
            else:
                return CheckReport.fails(
                    "chain",
                    ambient_order=ambient.order(),
                    subgroup_order=h_order,
                    steps=steps,
                )
        steps += 1
        check_chain_length(steps, g.degree, "σ-subnormal descent")
        logger.debug(f"σ-subnormal descent step {steps}: |A| = {ambient.order()}")
    return CheckReport.holds()


def is_subnormal(g: PermGroup, h: PermGroup) -> bool:
    """Plain subnormality: iterated normal closures of H reach H."""
    if not h.is_subgroup(g):
        raise PreconditionError("H is not contained in G")
    ambient = g
    steps = 0
    while ambient.order() != h.order():
        closure = normal_closure(ambient, h)
        if closure.order() == ambient.order():
            return False
        ambient = closure
        steps += 1
        check_chain_length(steps, g.degree, "normal closure descent")
    return True


def is_sigma_p_permutable(
    g: PermGroup,
    h: PermGroup,
    k: PermGroup,
    sigma: Partition,
    config: Optional[Config] = None,
) -> CheckReport:
    """
    Decide whether H/K is σ-p-permutable in G/K.

    H is σ-p-permutable iff H^G/H_G is σ-nilpotent and, for every block σ_i
    meeting π(H/H_G), the preimage T = ⟨S_{σ_i}(H), H_G⟩ of the Hall
    σ_i-piece of H/H_G is normalized by O^{σ_i}(G).
    """
    config = resolve_config(config)
    _check_triple(g, h, k)
    quotient_primes = Section(g, k, check=False).primes()
    sigma = fit_partition(sigma, quotient_primes, _group_primes(g))

    h_core = core(g, h, config)
    h_closure = normal_closure(g, h)
    between = Section(h_closure, h_core, check=False)
    if not between.is_trivial():
        nilpotent = is_sigma_nilpotent(
            between, sigma.restrict(between.primes()), config
        )
        if not nilpotent:
            return CheckReport.fails(
                "closure_not_nilpotent",
                closure_order=h_closure.order(),
                core_order=h_core.order(),
                reason=nilpotent.witness.describe() if nilpotent.witness else "",
            )

    inner_primes = Section(h, h_core, check=False).primes()
    if not inner_primes:
        return CheckReport.holds()
    parts = decompose_generators(h, sigma)
    for block in sigma.blocks:
        if not inner_primes & frozenset(block):
            continue
        piece = join(PermGroup(g.degree, parts[block]), h_core)
        conjugators = o_upper_pi(g, block, config).generators
        for x in piece.generators:
            for c in conjugators:
                if not piece.contains(x.conjugate(c)):
                    return CheckReport.fails(
                        "unstable", block=list(block), element=str(x), by=str(c)
                    )
    return CheckReport.holds()


def is_sigma_permutable_soluble(
    g: PermGroup,
    h: PermGroup,
    k: PermGroup,
    sigma: Partition,
    config: Optional[Config] = None,
) -> CheckReport:
    """
    σ-permutability of H/K in a σ-soluble G/K.

    In σ-soluble groups Hall σ_i-subgroups exist and σ-permutability
    coincides with σ-p-permutability, so the verdict is delegated.

    Raises:
        NotSigmaSolubleError: If G/K is not σ-soluble at σ
    """
    section = Section(g, k)
    soluble = is_sigma_soluble(section, sigma, config)
    if not soluble:
        raise NotSigmaSolubleError(
            "G/K is not σ-soluble, σ-permutability is undefined here: "
            + (soluble.witness.describe() if soluble.witness else "")
        )
    return is_sigma_p_permutable(g, h, k, sigma, config)
