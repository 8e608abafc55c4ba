import logging
from typing import Iterable
import mmh3  # pylint: disable=import-error
from GroupShifts.exceptions import SizeBudgetExceeded

LOGGER = logging.getLogger(__name__)


def fingerprint(*parts: object) -> int:
    """
    Stable unsigned 32 bit fingerprint of the string forms of ``parts``.

    :param parts: Anything with a deterministic ``str``.
    :return: mmh3 hash
    """
    return mmh3.hash(":".join(str(part) for part in parts), signed=False)


def sequence_fingerprint(values: Iterable[int]) -> int:
    return mmh3.hash(",".join(str(value) for value in values), signed=False)


def check_budget(dimension: str,
                 requested: int,
                 budget: int) -> None:
    if requested > budget:
        LOGGER.warning("Refusing to build %s of size %s (budget %s)", dimension, requested, budget)
        raise SizeBudgetExceeded(dimension, requested, budget)
