import logging
from collections import Counter
from fractions import Fraction
from itertools import product
from typing import Iterator, List, NamedTuple, Optional, Tuple
from sympy import factorint, isprime
from GroupShifts.constants import ELL_BOUND_FACTOR, FACTOR_MIDDLE, FACTOR_SIMPLE, HOM_SEARCH_LIMIT
from GroupShifts.exceptions import PreconditionError, UnverifiedSeriesError
from GroupShifts.finite_group import FiniteGroup, GroupHom, Subgroup, are_isomorphic, extend_homomorphism, \
    is_simple, isomorphic_actions, minimal_normal_subgroups, quotient_group
from GroupShifts.group_shift import GroupShift, blocks, contains, enumerate_finite, equals, full_shift, \
    ker_sigma_power, recode_1step, sigma_image, sigma_preimage, subgroup_shift
from GroupShifts.morphisms import QuotientPresentation, SlidingBlockCode, compose, first_isomorphism, image, \
    inverse, is_full_shift, is_normal_in, kernel, preimage, quotient, restrict, sigma_code
from GroupShifts.sigma_topology import head, identity_component, image_stabilization_index, \
    is_sigma_connected, is_sigma_infinitesimal, nilpotency_index
from GroupShifts.utils import LOGGER


class EmbeddingState(NamedTuple):
    """
    A code from ``shift`` into the full shift on ``alphabet`` whose kernel is ker sigma^ell.

    ``follower`` holds the letters b with (1, b) in image[1], ``lagging`` the letters a with
    (a, 1) in image[1], and ``core`` their intersection.
    """
    shift: GroupShift
    code: SlidingBlockCode
    ell: int
    image: GroupShift
    alphabet: FiniteGroup
    follower: Subgroup
    lagging: Subgroup
    core: Subgroup
    terminal: bool = False


class FactorExtraction(NamedTuple):
    kind: str
    subgroup: GroupShift
    simple_group: Optional[FiniteGroup] = None
    certificate: Optional[SlidingBlockCode] = None
    ell: Optional[int] = None


class SeriesVerdict(NamedTuple):
    passed: bool
    failures: List[str]


class ConjugacyNormalForm(NamedTuple):
    ell: int
    alphabet_size: int
    cycle_lengths: List[int]


class DecompositionSeries():
    """
    G = G_0 with head G/G_1, and G_1 > G_2 > ... > G_n where G_i/G_(i+1) is the full shift on
    ``factors[i]``, witnessed by ``certificates[i]``.
    """
    def __init__(self,
                 shift: GroupShift,
                 head_group: Tuple[FiniteGroup, GroupHom],
                 chain: List[GroupShift],
                 factors: List[FiniteGroup],
                 certificates: List[SlidingBlockCode]) -> None:
        """
        :param shift: The decomposed shift.
        :param head_group: G/G_1 with its sigma automorphism.
        :param chain: G_1 ... G_n, all over the alphabet of ``shift``.
        :param factors: Simple groups, one per step of the chain.
        :param certificates: Codes G_i -> full_shift(factors[i]) with kernel G_(i+1).
        """
        self.shift = shift
        self.head = head_group
        self.chain = chain
        self.factors = factors
        self.certificates = certificates
        self.verified = False

    @property
    def tail(self) -> GroupShift:
        return self.chain[-1]

    @property
    def nilpotency(self) -> int:
        return nilpotency_index(self.tail)

    def __repr__(self) -> str:
        return "<DecompositionSeries head {} factors {} tail {!r}>".format(
            self.head[0].order, [f.order for f in self.factors], self.tail)


def _letters(shift: GroupShift, position: int) -> frozenset:
    if shift.width == 0:
        return frozenset(w[0] for w in shift.edges)
    return frozenset(s[0] for s in shift.reachable_states(position))


def _embedding_state(shift: GroupShift, code: SlidingBlockCode, ell: int, presented: GroupShift) -> EmbeddingState:
    alphabet = code.target.alphabet
    pairs = presented.block_words(1)
    follower = Subgroup(alphabet, elements={b for a, b in pairs if a == 0})
    lagging = Subgroup(alphabet, elements={a for a, b in pairs if b == 0})
    core = Subgroup(alphabet, elements=follower.members & lagging.members)
    return EmbeddingState(shift, code, ell, presented, alphabet, follower, lagging, core)


def embedding_failures(st: EmbeddingState) -> List[str]:
    """
    The three embedding conditions: full letter image, follower kernel of order ld, kernel ker sigma^ell.
    """
    failures = []
    if len(_letters(st.image, 0)) != st.alphabet.order:
        failures.append("image letters do not cover the alphabet")
    if st.follower.order != st.shift.limit_degree:
        failures.append("follower subgroup has order {}, expected ld {}".format(st.follower.order,
                                                                                st.shift.limit_degree))
    if not equals(kernel(st.code), ker_sigma_power(st.shift, st.ell)):
        failures.append("code kernel differs from ker sigma^{}".format(st.ell))
    return failures


def standard_embedding(g: GroupShift) -> EmbeddingState:
    """
    Seeds the descent with the higher block presentation on G[n], ell = 0.
    """
    recoded, code = recode_1step(g)
    target = full_shift(recoded.alphabet, budget=g.budget)
    return _embedding_state(g, code.retarget(target), 0, recoded)


def _pair_code(st: EmbeddingState) -> SlidingBlockCode:
    """
    x -> (phi(x)_i, phi(x)_(i+1)) modulo lagging x follower.
    """
    pair_blocks = blocks(st.image, 1)
    group = pair_blocks.as_group()
    sub = Subgroup(group, elements=[pair_blocks.local((a, b)) for a in st.lagging for b in st.follower])
    cosets, projection = quotient_group(group, sub)
    k = st.code.anticipation + 1
    table = {w: projection(pair_blocks.local(st.code.apply(w))) for w in st.shift.block_words(k)}
    return SlidingBlockCode(st.shift, full_shift(cosets, budget=st.shift.budget), k, table)


def _shifted_code(st: EmbeddingState, i: int, letters: frozenset) -> SlidingBlockCode:
    sub = Subgroup(st.alphabet, elements=letters)
    group = sub.as_group()
    k = st.code.anticipation + i
    table = {w: group.local(st.code.apply(w)[-1]) for w in st.shift.block_words(k)}
    return SlidingBlockCode(st.shift, full_shift(group, budget=st.shift.budget), k, table)


def descend(st: EmbeddingState) -> EmbeddingState:
    """
    One descent step: shift past non-surjective coordinates, stop when the core is nontrivial or the
    shift is finite, otherwise pass to the quotient of the 2-block group by lagging x follower.

    :return: A state with a strictly smaller alphabet, or ``st`` flagged terminal.
    """
    if st.terminal:
        return st

    current, i = _letters(st.image, 0), 0
    following = _letters(st.image, 1)
    while following != current:
        current, i = following, i + 1
        following = _letters(st.image, i + 1)

    if i > 0:
        LOGGER.debug("Descent shifts by %s: alphabet %s -> %s", i, st.alphabet.order, len(current))
        code = _shifted_code(st, i, current)
        ell = st.ell + i
    elif st.core.order > 1:
        LOGGER.debug("Descent terminal with core of order %s", st.core.order)
        return st._replace(terminal=True)
    elif st.lagging.order == 1:
        LOGGER.debug("Descent terminal on a finite shift")
        return st._replace(terminal=True)
    else:
        code = _pair_code(st)
        ell = st.ell + 1
        LOGGER.debug("Descent quotient step: alphabet %s -> %s", st.alphabet.order, code.target.alphabet.order)

    presented = image(code, limit_degree=st.shift.limit_degree)
    following_state = _embedding_state(st.shift, code, ell, presented)
    if LOGGER.isEnabledFor(logging.DEBUG):
        for failure in embedding_failures(following_state):
            LOGGER.warning("Embedding condition violated after descent: %s", failure)
    return following_state


def terminal_embedding(g: GroupShift) -> EmbeddingState:
    st = standard_embedding(g)
    limit = st.alphabet.order
    steps = 0
    while not st.terminal:
        st = descend(st)
        steps += 1
        assert steps <= limit, "descent did not shrink the alphabet"
    return st


def _pick_minimal(group: FiniteGroup, prefer_last: bool) -> Subgroup:
    candidates = minimal_normal_subgroups(group)
    smallest = min(c.order for c in candidates)
    tied = sorted((c for c in candidates if c.order == smallest), key=lambda c: c.elements)
    return tied[-1] if prefer_last else tied[0]


def extract_factor(g: GroupShift, prefer_last: bool = False) -> FactorExtraction:
    """
    Either a normal subshift N with 1 < ld(N) < ld(g), or a certificate that g/ker sigma^ell is
    the full shift on a simple group.

    :param g: A sigma-connected infinite shift.
    :param prefer_last: Reverse the tie-break among minimal normal subgroups.
    """
    if g.is_finite:
        raise PreconditionError("extract_factor needs an infinite shift")
    if not is_sigma_connected(g):
        raise PreconditionError("extract_factor needs a sigma-connected shift")

    st = terminal_embedding(g)
    middle = kernel(_pair_code(st))
    if middle.limit_degree < g.limit_degree:
        LOGGER.debug("Pair kernel of ld %s splits ld %s", middle.limit_degree, g.limit_degree)
        return FactorExtraction(FACTOR_MIDDLE, middle)

    if is_simple(st.alphabet):
        return FactorExtraction(FACTOR_SIMPLE, ker_sigma_power(g, st.ell), st.alphabet, st.code, st.ell)

    minimal = _pick_minimal(st.alphabet, prefer_last)
    LOGGER.debug("Alphabet of order %s is not simple, pulling back a normal subgroup of order %s",
                 st.alphabet.order, minimal.order)
    sub = subgroup_shift(st.alphabet, minimal, budget=g.budget)
    return FactorExtraction(FACTOR_MIDDLE, preimage(st.code, sub))


def _splice(gn: GroupShift,
            n_chain: List[GroupShift],
            n_certificates: List[SlidingBlockCode]) -> Tuple[List[GroupShift], List[SlidingBlockCode]]:
    base = n_chain[0]
    if not contains(gn, base):
        raise PreconditionError("splice needs the series to start inside gn")
    presented = quotient(gn, base).quotient
    if not is_sigma_infinitesimal(presented):
        raise PreconditionError("splice needs a sigma-infinitesimal quotient gn/N")
    r = nilpotency_index(presented)
    LOGGER.debug("Splicing %s members through sigma^-%s", len(n_chain), r)

    chain = [sigma_preimage(member, gn, r) for member in n_chain]
    certificates = [compose(c, sigma_code(chain[i], n_chain[i], r)) for i, c in enumerate(n_certificates)]
    return chain, certificates


def splice(gn: GroupShift, n_series: List[GroupShift]) -> List[GroupShift]:
    """
    Pulls a series for N back through sigma^-r, r the nilpotency index of gn/N.
    """
    return _splice(gn, n_series, [])[0]


def _connected_series(h: GroupShift,
                      prefer_last: bool,
                      depth: int,
                      bound: int) -> Tuple[List[GroupShift], List[FiniteGroup], List[SlidingBlockCode]]:
    assert depth <= bound, "decomposition recursion deeper than the prime factor count allows"
    if h.is_finite:
        return [h], [], []

    found = extract_factor(h, prefer_last)
    if found.kind == FACTOR_SIMPLE:
        return [h, found.subgroup], [found.simple_group], [found.certificate]

    middle = identity_component(found.subgroup)
    projection = quotient(h, middle)
    q_chain, q_factors, q_certificates = _connected_series(projection.quotient, prefer_last, depth + 1, bound)

    pulled = [h] + [preimage(projection.projection, member) for member in q_chain[1:]]
    pulled_certificates = [compose(c, restrict(projection.projection, pulled[i]))
                           for i, c in enumerate(q_certificates)]

    n_chain, n_factors, n_certificates = _connected_series(middle, prefer_last, depth + 1, bound)
    spliced, spliced_certificates = _splice(pulled[-1], n_chain, n_certificates)

    return (pulled[:-1] + spliced,
            q_factors + n_factors,
            pulled_certificates + spliced_certificates)


def _block_constant(k: GroupShift) -> Fraction:
    """
    |K[m]| / ld(K)^m, the same for every m from the width on; counts the finite points a kernel carries.
    """
    return Fraction(len(k.edges), k.limit_degree ** k.width)


def _cyclic_certificates(current: GroupShift,
                         factor: FiniteGroup) -> Iterator[Tuple[Tuple[int, ...], SlidingBlockCode]]:
    letters = blocks(current, current.width)
    group = letters.as_group()
    gens = group.generators
    if factor.order ** len(gens) > HOM_SEARCH_LIMIT:
        LOGGER.debug("Skipping %s^%s block homomorphisms", factor.order, len(gens))
        return
    unit = factor.generators[0]
    target = full_shift(factor, budget=current.budget)
    for vector in product(range(factor.order), repeat=len(gens)):
        if not any(vector):
            continue
        hom = extend_homomorphism(group, factor, gens, [factor.power(unit, e) for e in vector])
        if hom is not None:
            table = {w: hom(letters.local(w)) for w in letters.words}
            yield vector, SlidingBlockCode(current, target, current.width, table)


def tighten_series(series: DecompositionSeries) -> DecompositionSeries:
    """
    Rebuilds the chain top down with the same factors, each step taking the certificate whose kernel has the
    smallest block constant, then the fewest nonzero generator images.

    Candidates are the homomorphisms of the width blocks onto a cyclic factor, plus the original certificate
    restricted to the new member. Returns ``series`` unchanged when a step has no candidate or the new tail is
    not sigma-infinitesimal.
    """
    if not series.factors:
        return series
    chain = [series.chain[0]]
    certificates = []  # type: List[SlidingBlockCode]
    for i, factor in enumerate(series.factors):
        current = chain[-1]
        goal = current.limit_degree // factor.order
        best = None  # type: Optional[tuple]
        candidates = _cyclic_certificates(current, factor) if isprime(factor.order) else []
        for vector, code in candidates:
            found = kernel(code)
            if found.limit_degree == goal:
                key = (_block_constant(found), sum(1 for e in vector if e), vector)
                if best is None or key < best[0]:
                    best = (key, code, found)

        original = series.certificates[i]
        if contains(original.source, current):
            code = restrict(original, current)
            found = kernel(code)
            if found.limit_degree == goal and (best is None or _block_constant(found) < best[0][0]):
                best = ((_block_constant(found),), code, found)

        if best is None:
            LOGGER.debug("No certificate onto factor %s at step %s, keeping the series", factor.order, i)
            return series
        certificates.append(best[1])
        chain.append(best[2])

    if not is_sigma_infinitesimal(chain[-1]):
        LOGGER.debug("Tightened tail is not sigma-infinitesimal, keeping the series")
        return series
    LOGGER.debug("Tightened tail from %s to %s words", len(series.tail.edges), len(chain[-1].edges))
    return DecompositionSeries(series.shift, series.head, chain, list(series.factors), certificates)


def decompose(g: GroupShift, prefer_last: bool = False) -> DecompositionSeries:
    """
    Subnormal series of g: head G/G_1, full shifts on simple groups, and a sigma-infinitesimal tail.

    :param g: Any group shift.
    :param prefer_last: Reverse every deterministic tie-break.
    :return: DecompositionSeries (not yet verified)
    """
    bound = sum(factorint(g.limit_degree).values()) + 1
    g1 = identity_component(g)
    chain, factors, certificates = _connected_series(g1, prefer_last, 1, bound)
    LOGGER.info("Decomposed %r into %s factors", g, len(factors))
    return tighten_series(DecompositionSeries(g, head(g), chain, factors, certificates))


def _certificate_failures(step: int,
                          upper: GroupShift,
                          lower: GroupShift,
                          certificate: SlidingBlockCode,
                          group: FiniteGroup) -> List[str]:
    prefix = "step {}: ".format(step)
    source = certificate.source
    if source.alphabet != upper.alphabet or not equals(source, upper):
        return [prefix + "certificate source is not the chain member"]

    failures = [prefix + failure for failure in certificate.check()]
    letters = is_full_shift(certificate.target)
    if letters is None or letters.order != group.order:
        failures.append(prefix + "certificate target is not the full shift on the factor")
    if group.order < 2 or not is_simple(group):
        failures.append(prefix + "factor of order {} is not simple".format(group.order))

    found = kernel(certificate)
    if found.alphabet != lower.alphabet or not equals(found, lower):
        failures.append(prefix + "certificate kernel is not the next chain member")
    elif upper.limit_degree // found.limit_degree != group.order:
        failures.append(prefix + "certificate is not onto the full shift")
    return failures


def verify_series(g: GroupShift, s: DecompositionSeries) -> SeriesVerdict:
    """
    Checks every condition of the series independently of how it was found; sets ``s.verified``.
    """
    failures = []  # type: List[str]
    if not s.chain:
        return SeriesVerdict(False, ["series has no members"])

    first = s.chain[0]
    if first.alphabet != g.alphabet or not equals(first, identity_component(g)):
        failures.append("first member is not the sigma-identity component")

    _, expected_sigma = head(g)
    _, head_sigma = s.head
    if not head_sigma.is_bijective() or not isomorphic_actions(head_sigma, expected_sigma, budget=g.budget):
        failures.append("head does not match G/G_1 with its sigma action")

    if not len(s.factors) == len(s.certificates) == len(s.chain) - 1:
        failures.append("chain, factors and certificates have inconsistent lengths")
    else:
        for i, (upper, lower) in enumerate(zip(s.chain, s.chain[1:])):
            if upper.alphabet != lower.alphabet or not contains(upper, lower):
                failures.append("step {}: next member is not contained in the previous one".format(i))
                continue
            if not is_normal_in(lower, upper):
                failures.append("step {}: next member is not normal".format(i))
            failures.extend(_certificate_failures(i, upper, lower, s.certificates[i], s.factors[i]))

    if not is_sigma_infinitesimal(s.tail):
        failures.append("tail is not sigma-infinitesimal")

    product = 1
    for factor in s.factors:
        product *= factor.order
    if product != g.limit_degree:
        failures.append("factor orders multiply to {}, expected ld {}".format(product, g.limit_degree))

    s.verified = not failures
    if failures:
        LOGGER.warning("Series for %r failed %s checks", g, len(failures))
    return SeriesVerdict(not failures, failures)


def factor_isomorphisms(s: DecompositionSeries,
                        step: int) -> Tuple[QuotientPresentation, SlidingBlockCode, SlidingBlockCode]:
    """
    G_i/G_(i+1) presented by the coset code, with the isomorphisms to and from the full shift on the factor.

    :return: (presentation, forward code, backward code)
    """
    presented, forward = first_isomorphism(s.certificates[step])
    return presented, forward, inverse(forward)


def uniqueness_report(a: DecompositionSeries, b: DecompositionSeries) -> SeriesVerdict:
    """
    Compares length, G_1 and the multiset of simple factors; tails are not compared.
    """
    if not (a.verified and b.verified):
        raise UnverifiedSeriesError("uniqueness_report needs two verified series")

    failures = []
    if len(a.chain) != len(b.chain):
        failures.append("series lengths differ: {} and {}".format(len(a.chain), len(b.chain)))

    g1, h1 = a.chain[0], b.chain[0]
    if g1.alphabet != h1.alphabet or not equals(g1, h1):
        failures.append("first members differ")

    unmatched = list(b.factors)
    for factor in a.factors:
        match = next((i for i, other in enumerate(unmatched)
                      if are_isomorphic(factor, other, budget=a.shift.budget)), None)
        if match is None:
            failures.append("factor of order {} has no isomorphic partner".format(factor.order))
        else:
            unmatched.pop(match)
    failures.extend("factor of order {} has no isomorphic partner".format(f.order) for f in unmatched)
    return SeriesVerdict(not failures, failures)


def factor_multiset(s: DecompositionSeries) -> Counter:
    return Counter(f.order for f in s.factors)


def _cycle_lengths(finite: GroupShift) -> List[int]:
    periods = Counter(len(p.period) for p in enumerate_finite(finite) if not p.preperiod)
    lengths = []  # type: List[int]
    for length, count in sorted(periods.items()):
        lengths.extend([length] * (count // length))
    return lengths


def conjugacy_normal_form(shift: GroupShift) -> ConjugacyNormalForm:
    """
    sigma^ell(G) ~ A^N x F: splits full shifts off the image of terminal embeddings until the
    quotient is finite, then reads the sigma-cycles of F off the stable image.
    """
    if shift.is_finite:
        ell = image_stabilization_index(shift, ELL_BOUND_FACTOR * max(len(shift.states), 1))
        stable = sigma_image(shift, ell or 0)
        return ConjugacyNormalForm(ell or 0, 1, _cycle_lengths(stable))

    st = terminal_embedding(shift)
    core = subgroup_shift(st.alphabet, st.core, budget=shift.budget)
    rest = conjugacy_normal_form(quotient(st.image, core).quotient)
    LOGGER.debug("Split a full shift of order %s at ell %s", st.core.order, st.ell)
    return ConjugacyNormalForm(st.ell + rest.ell, st.core.order * rest.alphabet_size, rest.cycle_lengths)
