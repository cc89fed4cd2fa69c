from lotkit.__main__ import lotkit
