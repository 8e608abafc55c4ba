from .mock_manifests import MOCK_MANIFEST, MOCK_TASK_MANIFEST  # noqa: F401
from .mock_bad_manifests import (MOCK_BAD_JSON, MOCK_NOT_AN_OBJECT, MOCK_UNKNOWN_ALPHABET,  # noqa: F401
                                 MOCK_UNKNOWN_ELEMENT, MOCK_NOT_A_GROUP, MOCK_UNKNOWN_TASK_SHIFT,
                                 MOCK_UNKNOWN_OPERATION)
