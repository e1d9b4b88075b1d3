"""Reference E3 tables, rows in display order (missing n-1, ..., 1, bottom)."""

SU3 = [
    ["ℤ^2", "ℤ^3", "ℤ^2⊕ℤ_3", "ℤ_3"],
    ["ℤ", "ℤ_3", "ℤ_3", "0"],
]

SU4 = [
    ["ℤ^3", "ℤ^8", "ℤ^12", "ℤ^13", "ℤ^9⊕ℤ_2", "ℤ^4⊕ℤ_2", "ℤ_4"],
    ["ℤ^3", "ℤ^6", "ℤ^7⊕ℤ_2", "ℤ^6⊕ℤ_2⊕ℤ_4", "ℤ^3⊕ℤ_2⊕ℤ_4", "ℤ⊕ℤ_2", "0"],
    ["ℤ", "ℤ_4", "ℤ_2", "ℤ_2", "0", "0", "0"],
]

# None marks cells without a reference value
SU5 = [
    ["ℤ^4", "ℤ^15", "ℤ^32", "ℤ^51", "ℤ^65", "ℤ^68", "ℤ^58", "ℤ^40⊕ℤ_5", "ℤ^21⊕ℤ_5",
     "ℤ^7⊕ℤ_5", "ℤ_5"],
    ["ℤ^6", "ℤ^20", "ℤ^39", "ℤ^58", "ℤ^69⊕ℤ_5", None, None, None, None, None, "0"],
    ["ℤ^4", "ℤ^10", "ℤ^16⊕ℤ_5", "ℤ^21⊕ℤ_5^2", "ℤ^23⊕ℤ_5^3", None, None, None, None, None, "0"],
    ["ℤ", "ℤ_5", "ℤ_5", "ℤ_5", "ℤ_5", "0", "0", "0", "0", "0", "0"],
]

SU5_MOD5 = [
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 2, 3, 3, 2, 1, 0],
    [0, 0, 1, 2, 3, 3, 2, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
]

REFERENCE = {2: SU3, 3: SU4, 4: SU5}


def mismatches(table, expected):
    """Cells (missing, degree, got, want) that disagree; None cells are skipped."""
    bad = []
    for key, want_row in zip(table.row_keys(), expected):
        for cell, want in zip(table.row(key), want_row):
            if want is None:
                continue
            got = cell.text()
            if got != want:
                bad.append((key, cell.degree, got, want))
    return bad


def mod_mismatches(table, expected):
    bad = []
    for key, want_row in zip(table.row_keys(), expected):
        for cell, want in zip(table.row(key), want_row):
            if cell.status != "ok" or cell.multiplicity != want:
                bad.append((key, cell.degree, cell.text(), want))
    return bad
