from ._fricke import *  # noqa: F401,F403
from ._fricke import __doc__  # noqa: F401
