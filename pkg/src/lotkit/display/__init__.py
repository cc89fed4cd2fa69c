from .lot_file import *
from .dot import *
from . import table
from . import kv_sections
