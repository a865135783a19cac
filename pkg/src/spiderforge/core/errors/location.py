"""Location – file, line, and field path used when reporting manifest and intake errors."""


class Location:
    __slots__ = ("fn", "ln", "field")

    def __init__(self, fn, ln=None, field=None):
        self.fn = fn
        self.ln = ln
        self.field = field

    def at_field(self, field):
        return Location(self.fn, self.ln, field)

    def __repr__(self):
        return f"Location({self.fn!r}, {self.ln!r}, {self.field!r})"
