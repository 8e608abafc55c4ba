MOCK_BAD_JSON = """
{
  "groups": {
    "C2": {"cyclic": 2},
  }
}
"""

MOCK_NOT_AN_OBJECT = """
["groups", "shifts"]
"""

MOCK_UNKNOWN_ALPHABET = """
{
  "groups": {"C2": {"cyclic": 2}},
  "shifts": {
    "broken": {"alphabet": "C7", "full": true}
  }
}
"""

MOCK_UNKNOWN_ELEMENT = """
{
  "groups": {"C2": {"cyclic": 2}},
  "shifts": {
    "broken": {"alphabet": "C2", "width": 1, "window": [["1", "5"]]}
  }
}
"""

MOCK_NOT_A_GROUP = """
{
  "groups": {
    "Broken": {"table": [[0, 1], [1, 1]]}
  }
}
"""

MOCK_UNKNOWN_TASK_SHIFT = """
{
  "groups": {"C2": {"cyclic": 2}},
  "shifts": {"full_c2": {"alphabet": "C2", "full": true}},
  "tasks": [{"operation": "analyze", "shift": "missing"}]
}
"""

MOCK_UNKNOWN_OPERATION = """
{
  "groups": {"C2": {"cyclic": 2}},
  "shifts": {"full_c2": {"alphabet": "C2", "full": true}},
  "tasks": [{"operation": "colour", "shift": "full_c2"}]
}
"""
