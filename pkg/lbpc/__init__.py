VERSION = "0.1.0"

from .utils import QQ, DomainMatrix, log
