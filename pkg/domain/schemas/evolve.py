EVOLVE_HEADERS = [
    "t",
    "bx",
    "by",
    "bz",
    "dbx",
    "dby",
    "dbz",
    "purity",
]
