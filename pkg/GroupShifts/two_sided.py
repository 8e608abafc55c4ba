from typing import List, Set, Tuple
from GroupShifts.exceptions import UnverifiedSeriesError
from GroupShifts.finite_group import FiniteGroup, GroupHom, are_isomorphic, is_simple
from GroupShifts.group_shift import BlockGroup, GroupShift, Word, blocks, contains, equals, periodic_count
from GroupShifts.morphisms import SlidingBlockCode, is_normal_in, kernel, restrict
from GroupShifts.decomposition import DecompositionSeries, SeriesVerdict
from GroupShifts.utils import LOGGER


def bi_trim(words: Set[Word], width: int) -> Set[Word]:
    """
    Drops window words whose target state has no successor or whose source state has no predecessor.
    """
    if width == 0:
        return set(words)
    live = set(words)
    while True:
        heads = {w[:-1] for w in live}
        tails = {w[1:] for w in live}
        kept = {w for w in live if w[1:] in heads and w[:-1] in tails}
        if len(kept) == len(live):
            return kept
        live = kept


class TwoSidedGroupShift(GroupShift):
    """
    A two-sided group shift: bi-infinite sequences whose windows lie in the window subgroup.
    """
    @staticmethod
    def _trim(words: Set[Word], width: int) -> Set[Word]:
        return bi_trim(words, width)


class StarSeries():
    """
    G* with head G/G_1 and G_1* > ... > G_n* = 1, each step a full two-sided shift on a simple group.
    """
    def __init__(self,
                 source: DecompositionSeries,
                 head_group: Tuple[FiniteGroup, GroupHom],
                 chain: List[TwoSidedGroupShift],
                 factors: List[FiniteGroup],
                 certificates: List[SlidingBlockCode]) -> None:
        self.source = source
        self.head = head_group
        self.chain = chain
        self.factors = factors
        self.certificates = certificates
        self.verified = False

    def __repr__(self) -> str:
        return "<StarSeries head {} factors {}>".format(self.head[0].order, [f.order for f in self.factors])


def star(g: GroupShift) -> TwoSidedGroupShift:
    """
    The two-sided shift on the same window.
    """
    return TwoSidedGroupShift(g.alphabet, g.width, g.edges, budget=g.budget)


def star_series(s: DecompositionSeries) -> StarSeries:
    """
    Stars every member of a verified series; the sigma-infinitesimal tail becomes the one-point shift.
    """
    if not s.verified:
        raise UnverifiedSeriesError("star_series needs a verified decomposition series")
    chain = [star(member) for member in s.chain]
    certificates = [restrict(c, chain[i]).retarget(star(c.target)) for i, c in enumerate(s.certificates)]
    LOGGER.debug("Starred a series of %s members", len(chain))
    return StarSeries(s, s.head, chain, list(s.factors), certificates)


def verify_star_series(s: StarSeries) -> SeriesVerdict:
    """
    Normality, certificate kernels and images on the two-sided members, and the factor list of the
    one-sided series it came from.
    """
    failures = []
    for i, (upper, lower) in enumerate(zip(s.chain, s.chain[1:])):
        prefix = "step {}: ".format(i)
        if not contains(upper, lower):
            failures.append(prefix + "next member is not contained in the previous one")
            continue
        if not is_normal_in(lower, upper):
            failures.append(prefix + "next member is not normal")

        certificate, group = s.certificates[i], s.factors[i]
        failures.extend(prefix + failure for failure in certificate.check())
        if not two_sided_is_full(certificate.target) or certificate.target.alphabet.order != group.order:
            failures.append(prefix + "certificate target is not the full two-sided shift on the factor")
        if group.order < 2 or not is_simple(group):
            failures.append(prefix + "factor of order {} is not simple".format(group.order))
        found = kernel(certificate)
        if not equals(found, lower):
            failures.append(prefix + "certificate kernel is not the next member")
        elif upper.limit_degree // found.limit_degree != group.order:
            failures.append(prefix + "certificate is not onto the full shift")

    if s.chain and len(s.chain[-1].edges) != 1:
        failures.append("last member is not the one-point shift")

    one_sided = s.source.factors
    if len(one_sided) != len(s.factors) or not all(are_isomorphic(a, b) for a, b in zip(one_sided, s.factors)):
        failures.append("factors differ from the one-sided series")

    s.verified = not failures
    return SeriesVerdict(not failures, failures)


def two_sided_blocks(g: TwoSidedGroupShift, i: int) -> BlockGroup:
    return blocks(g, i)


def two_sided_periodic_count(g: TwoSidedGroupShift, p: int) -> int:
    return periodic_count(g, p)


def two_sided_is_full(g: GroupShift) -> bool:
    return g.width == 0 and len(g.edges) == g.alphabet.order
