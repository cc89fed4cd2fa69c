from termcolor import cprint

from lotkit.display.common import verdict_color


class Column:
    def __init__(self, name, fmt):
        self.name = name
        self.fmt = fmt

    def header(self):
        return self.fmt.format(self.name.upper())

    def row(self, data):
        return self.fmt.format(data)


COLUMNS = [
    Column("m", "{:>3}"),
    Column("source", "{:<8}"),
    Column("graphs", "{:>8}"),
    Column("maximal", "{:>8}"),
    Column("certified", "{:>9}"),
    Column("viol", "{:>5}"),
]


def display_summary(rows):
    """One line per census or sample batch, coloured by violation count."""
    for c in COLUMNS:
        print(c.header(), end=" ")
    print(flush=True)
    for r in rows:
        data = [r.m, r.source, r.checked, r.maximal, r.certified, r.violations]
        color = verdict_color(r.violations)
        for c, d in zip(COLUMNS, data):
            cprint(c.row(d), color, end=" ")
        print(flush=True)
