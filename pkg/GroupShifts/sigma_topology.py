from fractions import Fraction
from typing import FrozenSet, List, NamedTuple, Optional, Tuple
import networkx as nx
from sympy import divisors, mobius
from GroupShifts.constants import DEFAULT_PERIOD_BOUND, ELL_BOUND_FACTOR
from GroupShifts.exceptions import PreconditionError
from GroupShifts.finite_group import FiniteGroup, GroupHom, Subgroup, quotient_group, trivial_subgroup
from GroupShifts.group_shift import GroupShift, Word, blocks, equals, periodic_count
from GroupShifts.utils import LOGGER


class SigmaComponentReport(NamedTuple):
    count: int
    identity_component: GroupShift
    head: Tuple[FiniteGroup, GroupHom]
    partition: List[FrozenSet[Word]]


class ConjugacyInvariants(NamedTuple):
    d: int
    fixed_alphabet_check: bool
    f: List[Fraction]
    cycle_counts: List[Fraction]
    consistent: bool
    ell: Optional[int]


def _recurrent_components(graph: nx.DiGraph) -> List[FrozenSet[Word]]:
    return [frozenset(c) for c in nx.strongly_connected_components(graph)
            if len(c) > 1 or graph.has_edge(next(iter(c)), next(iter(c)))]


def sigma_components(shift: GroupShift) -> SigmaComponentReport:
    """
    Groups the recurrent strongly connected pieces of the state graph whenever a directed path
    joins them; every state belongs to the component its forward paths end in.
    """
    graph = nx.DiGraph(shift.state_graph)
    recurrent = _recurrent_components(graph)
    condensed = nx.condensation(graph)
    mapping = condensed.graph["mapping"]
    recurrent_ids = {mapping[next(iter(c))]: c for c in recurrent}

    meta = nx.Graph()
    meta.add_nodes_from(recurrent_ids)
    for node in recurrent_ids:
        for other in nx.descendants(condensed, node):
            if other in recurrent_ids:
                meta.add_edge(node, other)

    components = list(nx.connected_components(meta))
    owner = {node: index for index, component in enumerate(components) for node in component}

    members = [set() for _ in components]  # type: List[set]
    for s in shift.states:
        node = mapping[s]
        reached = sorted(owner[n] for n in nx.descendants(condensed, node) | {node} if n in owner)
        members[reached[0]].add(s)
    partition = sorted((frozenset(m) for m in members),
                       key=lambda states: (shift.identity_state not in states, min(states)))

    return SigmaComponentReport(len(partition), identity_component(shift), head(shift), partition)


def identity_component(shift: GroupShift) -> GroupShift:
    """
    G^sc: the full subgraph on states with a directed path to the identity state.
    """
    if shift.width == 0:
        return shift
    target = shift.identity_state
    inside = nx.ancestors(shift.state_graph, target) | {target}
    return shift.derive(shift.alphabet, shift.width,
                        [w for w in shift.edges if w[:-1] in inside and w[1:] in inside])


def head(shift: GroupShift) -> Tuple[FiniteGroup, GroupHom]:
    """
    G/G^sc with the bijection sigma induces on it, read off the state group.
    """
    if shift.width == 0:
        return trivial_head(shift.alphabet)

    states = blocks(shift, shift.width - 1)
    state_group = states.as_group()
    inside = nx.ancestors(shift.state_graph, shift.identity_state) | {shift.identity_state}
    core = Subgroup(state_group, elements=[states.local(s) for s in inside])
    cosets, projection = quotient_group(state_group, core)

    representatives = {}
    for s in shift.states:
        representatives.setdefault(projection(states.local(s)), s)
    sigma = [projection(states.local(shift.successor_states(representatives[c])[0])) for c in range(cosets.order)]
    return cosets, GroupHom(cosets, cosets, sigma)


def is_sigma_infinitesimal(shift: GroupShift) -> bool:
    """
    Finite, and the only cycle of the functional state graph is the identity loop.
    """
    if not shift.is_finite:
        return False
    recurrent = _recurrent_components(nx.DiGraph(shift.state_graph))
    return recurrent == [frozenset([shift.identity_state])]


def nilpotency_index(shift: GroupShift) -> int:
    """
    Smallest r with sigma^r = 1 on the shift: the longest walk into the identity state.
    """
    if not is_sigma_infinitesimal(shift):
        raise PreconditionError("nilpotency_index needs a sigma-infinitesimal shift")
    if shift.width == 0:
        return 0
    reverse = nx.DiGraph(shift.state_graph).reverse()
    reverse.remove_edges_from([(shift.identity_state, shift.identity_state)])
    distances = nx.single_source_shortest_path_length(reverse, shift.identity_state)
    return max(distances.values())


def is_sigma_connected(shift: GroupShift) -> bool:
    return equals(shift, identity_component(shift))


def image_stabilization_index(shift: GroupShift, bound: int) -> Optional[int]:
    """
    Smallest ell <= bound with sigma^ell(G) = sigma^(ell+1)(G).
    """
    if shift.width == 0:
        return 0
    current = set(shift.states)
    for ell in range(bound + 1):
        following = {t for s in current for t in shift.successor_states(s)}
        if following == current:
            return ell
        current = following
    LOGGER.warning("Image chain did not stabilize within %s steps", bound)
    return None


def conjugacy_invariants(shift: GroupShift,
                         P: int = DEFAULT_PERIOD_BOUND,
                         ell_bound: int = None) -> ConjugacyInvariants:
    """
    Periodic-point invariants of sigma^ell(G) ~ A^N x F with |A| = ld(G).

    :param P: Largest period examined.
    :param ell_bound: Search bound for ell; defaults to twice the number of states.
    """
    if P < 1:
        raise PreconditionError("Period bound must be at least 1")
    d = shift.limit_degree
    f = [Fraction(periodic_count(shift, p), d ** p) for p in range(1, P + 1)]
    cycle_counts = []
    for q in range(1, P + 1):
        total = sum(int(mobius(q // m)) * f[m - 1] for m in divisors(q))
        cycle_counts.append(Fraction(total) / q)

    consistent = all(x.denominator == 1 and x >= 0 for x in f + cycle_counts) and f[0] >= 1
    if ell_bound is None:
        ell_bound = ELL_BOUND_FACTOR * max(len(shift.states), 1)
    ell = image_stabilization_index(shift, ell_bound)
    return ConjugacyInvariants(d, f[0] >= 1, f, cycle_counts, consistent, ell)


def trivial_head(alphabet: FiniteGroup) -> Tuple[FiniteGroup, GroupHom]:
    group = trivial_subgroup(alphabet).as_group()
    return group, GroupHom(group, group, [0])
