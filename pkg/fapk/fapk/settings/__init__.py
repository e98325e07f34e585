# local.py, when present, starts with `from .common import *`
try:
    from .local import *
except ImportError:
    from .common import *
