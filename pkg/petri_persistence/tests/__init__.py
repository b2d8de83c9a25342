from .test_basis import *
from .test_checks import *
from .test_commands import *
from .test_log import *
from .test_models import *
from .test_netfile import *
from .test_nets import *
from .test_omega import *
from .test_oracle import *
from .test_persistence import *
from .test_statespace import *
