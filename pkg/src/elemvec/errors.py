class DimensionError(ValueError):
    """Operands have incompatible lengths or shapes."""


class NotMemberError(ValueError):
    """A vector is not a member of the cone or polyhedron it was checked against."""


class EmptyPolyhedronError(ValueError):
    pass


class SizeGuardError(ValueError):
    """An exhaustive routine was asked to run beyond its size limit."""
