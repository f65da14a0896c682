class GeometryError(Exception):
    """Base exception for geometric construction and classification errors"""
    pass

class DegenerateJoin(GeometryError):
    """Raised when two points are projectively equal and span no line"""
    pass

class InfiniteLine(GeometryError):
    """Raised when an affine operation is applied to a line at infinity"""
    pass

class SingularMatrix(GeometryError):
    """Raised when a collineation or graph matrix is not invertible"""
    pass

class NotOnQuadric(GeometryError):
    """Raised when a 6-vector is not a Pluecker vector of a line"""
    pass

class BadParameter(GeometryError):
    """Raised when a profile or placement parameter is out of range"""
    pass

class NotBracketed(GeometryError):
    """Raised when a monotone inversion has no sign change in its bracket"""
    pass

class NoRoot(NotBracketed):
    """Raised when no spread member passes through a point"""
    pass

class MultipleRoots(GeometryError):
    """Raised when several spread members pass through a point"""
    pass

class OrientationMismatch(GeometryError):
    """Raised when a line belongs to a class only with reversed orientation"""

    def __init__(self, message, actual=None):
        super().__init__(message)
        self.actual = actual


class NotO2Admissible(GeometryError):
    """Raised when the O2 symmetry is requested for an off-center family"""
    pass

class NotAcentric(GeometryError):
    """Raised when a partition failure is requested for a centered family"""
    pass

class NotRegular(GeometryError):
    """Raised when a regular profile is required but not supplied"""
    pass

class PartitionFailure(GeometryError):
    """Raised when non-oriented classes of an off-center family overlap"""
    pass

class ConfigurationError(Exception):
    """Raised when there's a configuration error"""
    pass
