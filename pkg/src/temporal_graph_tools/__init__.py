from .exceptions import *  # noqa
from .utils import *  # noqa
from .tvg import *  # noqa
from .corpus import *  # noqa
from .network import *  # noqa
from .metrics import *  # noqa
from .pipeline import *  # noqa
