"""
Character tables from central units
===================================

Compares characters read off the scaled units with an independent
Murnaghan-Nakayama computation, and checks orthogonality.
"""

from snreps.characters import character_table, mn_table

for n in range(1, 7):
    table = character_table(n)
    agree = table.chi == mn_table(n)
    print(f"n={n}: {len(table.partitions)} classes, matches MN: {agree}, "
          f"rows orthogonal: {table.rows_orthogonal()}, columns orthogonal: {table.columns_orthogonal()}")

print()
print(character_table(5).to_text())
