import os
import re

ELEMENT_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")
WORD_RE = re.compile(r"^(\d+)((?:[xyz]\d+)*)$")

# Every enumeration over subsets of a carrier is refused above this size.
SUBSET_CAP = int(os.environ.get('REFLECTOR_SUBSET_CAP', 16))
ISO_CAP = int(os.environ.get('REFLECTOR_ISO_CAP', 24))
UNIQUENESS_CAP = int(os.environ.get('REFLECTOR_UNIQUENESS_CAP', 6))

# Word posemigroup: sample size for the distributivity checks and the
# default bound for upper-bound search.
WORD_LETTERS = int(os.environ.get('REFLECTOR_WORD_LETTERS', 2))
WORD_COEFF = int(os.environ.get('REFLECTOR_WORD_COEFF', 3))

LOG_LEVEL = (os.environ.get('REFLECTOR_LOG_LEVEL') or 'WARNING').strip().upper()

SCENARIO_DIR = os.environ.get(
    'REFLECTOR_SCENARIO_DIR',
    os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'scenarios'),
)
SCENARIO_SUFFIX = '.pos'
