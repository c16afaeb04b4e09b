import sys
from pathlib import Path

from hypothesis import settings

# tests import the package as `src.*` from the repository root
ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")
