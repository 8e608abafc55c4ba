from typing import Callable, Dict, List, NamedTuple, Optional, Tuple
from GroupShifts.constants import ELL_BOUND_FACTOR
from GroupShifts.exceptions import AlphabetMismatchError, CodeShapeError, ContainmentError, NotNormalError, \
    PreconditionError
from GroupShifts.finite_group import FiniteGroup, GroupHom, Subgroup, closure, quotient_group
from GroupShifts.group_shift import GroupShift, Word, blocks, contains, equals, full_shift, intersection, \
    trivial_shift
from GroupShifts.utils import LOGGER


class SlidingBlockCode():
    """
    x -> (rule(x_i .. x_{i+k}))_i from ``source`` into ``target``, stored as an explicit block table.
    """
    def __init__(self,
                 source: GroupShift,
                 target: GroupShift,
                 anticipation: int,
                 table: Dict[Word, int],
                 normalize: bool = True) -> None:
        """
        :param source: Domain shift.
        :param target: Codomain shift.
        :param anticipation: k; the rule reads blocks of length k+1.
        :param table: Target letter for every (k+1)-block of the source.
        :param normalize: Drop trailing block coordinates the rule never reads.
        """
        if any(len(block) != anticipation + 1 for block in table):
            raise CodeShapeError("Rule table blocks must have length {}".format(anticipation + 1))
        self.source = source
        self.target = target
        self.anticipation = anticipation
        self.table = dict(table)
        if normalize:
            self._normalize()
        self._rule = None  # type: Optional[GroupHom]

    @classmethod
    def from_function(cls,
                      source: GroupShift,
                      target: GroupShift,
                      anticipation: int,
                      function: Callable[[Word], int]) -> "SlidingBlockCode":
        return cls(source, target, anticipation, {b: function(b) for b in source.block_words(anticipation)})

    def _normalize(self) -> None:
        while self.anticipation > 0:
            shorter = {}  # type: Dict[Word, int]
            for block, letter in self.table.items():
                if shorter.setdefault(block[:-1], letter) != letter:
                    return
            self.table = shorter
            self.anticipation -= 1

    @property
    def rule(self) -> GroupHom:
        """
        The rule as a homomorphism from the block group source[k] to the target alphabet.
        """
        if self._rule is None:
            letters = blocks(self.source, self.anticipation)
            self._rule = GroupHom(letters.as_group(), self.target.alphabet,
                                  [self.table[w] for w in letters.words])
        return self._rule

    def apply(self, word: Word) -> Word:
        k = self.anticipation
        try:
            return tuple(self.table[tuple(word[i:i + k + 1])] for i in range(len(word) - k))
        except KeyError as excep:
            raise CodeShapeError("Block {} is not admissible for this code's source".format(excep)) from excep

    def retarget(self, target: GroupShift) -> "SlidingBlockCode":
        return SlidingBlockCode(self.source, target, self.anticipation, self.table, normalize=False)

    def check(self) -> List[str]:
        """
        Validates the rule homomorphism and that images of source blocks are target blocks.

        :return: List of failures, empty when the code is valid.
        """
        failures = []
        if not self.rule.is_homomorphism():
            failures.append("rule is not a group homomorphism on source blocks")
        allowed = set(self.target.edges)
        span = self.anticipation + self.target.width
        if any(self.apply(b) not in allowed for b in self.source.block_words(span)):
            failures.append("code leaves the target window")
        return failures

    def __repr__(self) -> str:
        return "<SlidingBlockCode k={} {!r} -> {!r}>".format(self.anticipation, self.source, self.target)


class QuotientPresentation(NamedTuple):
    quotient: GroupShift
    projection: SlidingBlockCode


def identity_code(shift: GroupShift) -> SlidingBlockCode:
    return SlidingBlockCode(shift, shift, 0, {(x,): x for x in {w[0] for w in shift.edges}})


def apply(code: SlidingBlockCode, word: Word) -> Word:
    return code.apply(word)


def compose(outer: SlidingBlockCode, inner: SlidingBlockCode) -> SlidingBlockCode:
    """
    outer after inner; anticipations add.
    """
    if inner.target.alphabet != outer.source.alphabet:
        raise CodeShapeError("Codes are not composable: alphabets differ")
    k = inner.anticipation + outer.anticipation
    table = {b: outer.apply(inner.apply(b))[0] for b in inner.source.block_words(k)}
    return SlidingBlockCode(inner.source, outer.target, k, table)


def restrict(code: SlidingBlockCode, sub: GroupShift) -> SlidingBlockCode:
    if not contains(code.source, sub):
        raise ContainmentError("Can only restrict a code to a subshift of its source")
    k = code.anticipation
    return SlidingBlockCode(sub, code.target, k, {b: code.table[b] for b in sub.block_words(k)})


def sigma_code(source: GroupShift, target: GroupShift, r: int) -> SlidingBlockCode:
    return SlidingBlockCode(source, target, r, {b: b[r] for b in source.block_words(r)}, normalize=False)


def image(code: SlidingBlockCode, limit_degree: int = None) -> GroupShift:
    """
    phi(G), found by enumerating image blocks until the kernel ratio reaches ld(G)/ld(ker phi).

    :param limit_degree: Known limit degree of the image; computed from the kernel when omitted.
    """
    if limit_degree is None:
        limit_degree = code.source.limit_degree // kernel(code).limit_degree
    previous = 1
    j = 0
    while True:
        words = {code.apply(b) for b in code.source.block_words(code.anticipation + j)}
        if len(words) // previous == limit_degree:
            LOGGER.debug("Image window stabilized at width %s with ld %s", j, limit_degree)
            return code.target.derive(code.target.alphabet, j, words)
        previous = len(words)
        j += 1


def preimage(code: SlidingBlockCode, sub: GroupShift) -> GroupShift:
    """
    {x in source : code(x) in sub}.
    """
    if sub.alphabet != code.target.alphabet:
        raise AlphabetMismatchError("Preimage needs a subshift over the code's target alphabet")
    if not contains(code.target, sub):
        raise ContainmentError("Preimage needs a subshift of the code's target")
    source = code.source
    span = code.anticipation + sub.width + 1
    allowed = set(sub.edges)
    width = max(source.width, code.anticipation + sub.width)

    def accept(word: Word) -> bool:
        return len(word) < span or code.apply(word[-span:]) in allowed

    return source.derive(source.alphabet, width, source.walk(width + 1, accept))


def kernel(code: SlidingBlockCode) -> GroupShift:
    return preimage(code, trivial_shift(code.target.alphabet, budget=code.source.budget))


def _normalizes(ambient: Subgroup, sub: Subgroup) -> bool:
    power = sub.parent
    return all(power.conjugate(t, h) in sub for t in ambient.generators for h in sub.generators)


def is_normal_in(n: GroupShift, g: GroupShift) -> bool:
    """
    N is normal in G iff the block group G[w_N] normalizes the window N[w_N].
    """
    if not contains(g, n):
        raise ContainmentError("is_normal_in needs n inside g")
    return _normalizes(blocks(g, n.width).blocks, n.window)


def quotient(g: GroupShift, n: GroupShift) -> QuotientPresentation:
    """
    G/N presented on the alphabet G[m]/N[m], m the width of N, through the coset code.
    """
    if not contains(g, n):
        raise ContainmentError("quotient needs n inside g")
    if not is_normal_in(n, g):
        raise NotNormalError("Cannot form a quotient by a non-normal subshift")
    m = n.width
    letters = blocks(g, m)
    group = letters.as_group()
    sub = Subgroup(group, elements=[letters.local(w) for w in n.edges])
    cosets, projection = quotient_group(group, sub)
    code = SlidingBlockCode(g, full_shift(cosets, budget=g.budget), m,
                            {w: projection(letters.local(w)) for w in letters.words})
    presented = image(code, limit_degree=g.limit_degree // n.limit_degree)
    return QuotientPresentation(presented, code.retarget(presented))


def factor_through(outer: SlidingBlockCode,
                   inner: SlidingBlockCode,
                   bound: int = None) -> SlidingBlockCode:
    """
    The code iota on inner's target with iota after inner equal to outer.

    Found by block lookup: the shortest window of inner's output that determines outer's letter.
    inner must map onto its target and its kernel must lie in outer's kernel.

    :param bound: Longest lookup window tried, defaults to a multiple of the number of source states.
    """
    source = inner.source
    if source.alphabet != outer.source.alphabet or not equals(source, outer.source):
        raise CodeShapeError("Codes need a common source to factor through each other")
    if not contains(kernel(outer), kernel(inner)):
        raise PreconditionError("The inner code kills points the outer code keeps")
    if bound is None:
        bound = ELL_BOUND_FACTOR * (len(source.states) + 1) + outer.anticipation

    for j in range(bound + 1):
        span = max(outer.anticipation, inner.anticipation + j)
        table = {}  # type: Dict[Word, int]
        for block in source.block_words(span):
            key = inner.apply(block[:inner.anticipation + j + 1])
            letter = outer.table[block[:outer.anticipation + 1]]
            if table.setdefault(key, letter) != letter:
                break
        else:
            if set(table) == set(inner.target.block_words(j)):
                LOGGER.debug("Code factors through a window of length %s", j + 1)
                return SlidingBlockCode(inner.target, outer.target, j, table)
    raise PreconditionError("No lookup window up to {} determines the outer code".format(bound + 1))


def inverse(code: SlidingBlockCode, bound: int = None) -> SlidingBlockCode:
    """
    Inverse of a code that is a bijection onto its target.
    """
    return factor_through(identity_code(code.source), code, bound=bound)


def first_isomorphism(code: SlidingBlockCode) -> Tuple[QuotientPresentation, SlidingBlockCode]:
    """
    source/ker(code) together with the isomorphism from it onto image(code).
    """
    presented = quotient(code.source, kernel(code))
    iso = factor_through(code, presented.projection)
    return presented, iso.retarget(image(code))


def product_subgroup(h: GroupShift, n: GroupShift, ambient: GroupShift) -> GroupShift:
    """
    HN, block by block as closures of H[j] and N[j], stopped once the kernel ratio reaches
    ld(H) ld(N) / ld(H n N).
    """
    if not contains(ambient, h) or not contains(ambient, n):
        raise ContainmentError("product_subgroup needs both factors inside the ambient shift")
    if not _normalizes(blocks(h, n.width).blocks, n.window):
        raise NotNormalError("h does not normalize n")
    target = h.limit_degree * n.limit_degree // intersection(h, n).limit_degree
    previous = 1
    j = 0
    while True:
        h_blocks, n_blocks = blocks(h, j), blocks(n, j)
        joined = closure(h_blocks.power, h_blocks.blocks.generators + n_blocks.blocks.generators,
                         budget=ambient.budget)
        if joined.order // previous == target:
            return ambient.derive(ambient.alphabet, j, [h_blocks.power.decode(e) for e in joined.elements])
        previous = joined.order
        j += 1


def is_full_shift(g: GroupShift) -> Optional[FiniteGroup]:
    """
    The letter group when the canonical presentation is literally a full shift, else None.
    """
    if g.width != 0:
        return None
    letters = [w[0] for w in g.edges]
    if len(letters) == g.alphabet.order:
        return g.alphabet
    return Subgroup(g.alphabet, elements=letters).as_group()
