"""Compare closed-form predictions against exhaustive computation."""

from rainbow_ren.closed_forms import format_verify_table, parse_sweep, verify

for tokens in (["cycles", "3..12"], ["wheels", "3..9"], ["paths", "3..8"],
               ["jahangir", "n=1,2,3", "m=3..5"],
               ["corona", "complete:4", "complete:2"], ["corona", "complete:2", "cycle:5"]):
    rows = verify(parse_sweep(tokens))
    print("$", " ".join(tokens))
    print(format_verify_table(rows))
    print()
