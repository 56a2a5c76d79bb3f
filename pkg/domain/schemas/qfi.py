QFI_HEADERS = [
    "t",
    "qfi",
    "bx",
    "by",
    "bz",
    "purity",
]

SWEEP_COLUMNS = [
    "series",
    "theta",
    "k_dephase",
    "k_tilt",
    "alpha",
]
