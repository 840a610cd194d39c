"""Weight diagrams, arrow diagrams and translation functors for p(n).

Weights are passed as lists of coordinates (lambda_1 >= ... >= lambda_n).
Grothendieck group vectors come back as lists of
{"family", "weight", "parity", "coeff"} dicts.
"""

from ._pkit import *  # noqa: F401,F403
from ._pkit import __doc__  # noqa: F401
