from ._settings import settings
from ._version import __version__
from . import errors, geometry, interference, independence, coloring
from . import refinement, scheduler, oracle
from . import generator, serialize, report, bench
