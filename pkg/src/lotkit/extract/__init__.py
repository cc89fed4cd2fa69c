from .presentation import *
from .lot_file import *
