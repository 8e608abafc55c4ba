from .Task import Task  # noqa: F401
from .Analyze import Analyze  # noqa: F401
from .Decompose import Decompose  # noqa: F401
from .Invariants import Invariants  # noqa: F401
from .Star import Star  # noqa: F401
from .Dot import Dot  # noqa: F401
