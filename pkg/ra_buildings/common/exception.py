#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""Exceptions raised by the ra-buildings toolkit.

Every exception carries a translatable ``_msg_fmt`` which is formatted with
the keyword arguments given to the constructor, and an ``exit_code`` used by
the command line front end.
"""

from oslo_log import log
import six

from ra_buildings.common.i18n import _
from ra_buildings.common.i18n import _LE


LOG = log.getLogger(__name__)

EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_VIOLATION = 4


class RABuildingsException(Exception):
    """Base exception.

    Subclasses define ``_msg_fmt`` with ``%(name)s`` placeholders; the
    keyword arguments passed to the constructor are kept in ``kwargs``.
    """

    _msg_fmt = _("An unknown exception occurred.")
    exit_code = 1

    def __init__(self, message=None, **kwargs):
        self.kwargs = kwargs
        if not message:
            try:
                message = self._msg_fmt % kwargs
            except (KeyError, TypeError):
                prs = ', '.join('%s: %s' % pair for pair in kwargs.items())
                LOG.exception(_LE('Exception in string format operation '
                                  '(arguments %s)'), prs)
                message = self._msg_fmt
        super(RABuildingsException, self).__init__(message)

    def __str__(self):
        return six.text_type(self.args[0])


class InputError(RABuildingsException):
    exit_code = EXIT_INPUT


class ResourceBoundExceeded(RABuildingsException):
    exit_code = EXIT_RESOURCE


class PropertyViolation(RABuildingsException):
    """A checked statement failed; the payload is a counterexample."""

    _msg_fmt = _("Property violated: %(reason)s")
    exit_code = EXIT_VIOLATION


class UnknownType(InputError):
    _msg_fmt = _("Type %(label)s is not declared in the diagram.")


class InvalidDiagram(InputError):
    _msg_fmt = _("Invalid diagram: %(reason)s")


class InvalidParameters(InputError):
    _msg_fmt = _("Invalid parameters: %(reason)s")


class RankTooLarge(ResourceBoundExceeded):
    _msg_fmt = _("Rank %(rank)s exceeds the census bound %(bound)s.")


class ColorOutOfRange(InputError):
    _msg_fmt = _("Color %(color)s of type %(label)s is outside "
                 "[1, %(top)s].")


class NotAPanel(InputError):
    _msg_fmt = _("Residue of type %(types)s is not a panel.")


class InvalidPanelClosedSet(InputError):
    _msg_fmt = _("Chamber set is not panel-closed: %(reason)s")


class BallTooLarge(ResourceBoundExceeded):
    _msg_fmt = _("Ball of radius %(radius)s exceeds %(bound)s chambers.")


class PreconditionViolated(InputError):
    _msg_fmt = _("Configuration does not match the precondition: "
                 "%(reason)s")


class NonCommutingTypes(PropertyViolation):
    _msg_fmt = _("Closing square requires commuting types, got %(i)s and "
                 "%(j)s for chambers %(chambers)s.")


class SquareNotClosed(PropertyViolation):
    _msg_fmt = _("Completion %(chamber)s has distance %(dist)s to C, "
                 "expected %(expected)s.")


class InfiniteTreeWall(ResourceBoundExceeded):
    _msg_fmt = _("Tree-wall of rung type %(label)s has infinitely many "
                 "panels.")


class PathEscapesBall(ResourceBoundExceeded):
    _msg_fmt = _("No path between %(first)s and %(second)s inside the "
                 "ball.")


class EscapesBound(ResourceBoundExceeded):
    _msg_fmt = _("Closure leaves the ball of radius %(bound)s.")


class GroupTooLarge(ResourceBoundExceeded):
    _msg_fmt = _("Permutation group exceeds %(bound)s elements.")


class NotASubgroup(InputError):
    _msg_fmt = _("Generator %(perm)s does not lie in the supergroup.")


class DegreeMismatch(InputError):
    _msg_fmt = _("Degree %(degree)s does not match %(expected)s for "
                 "%(what)s.")


class InvalidPermutation(InputError):
    _msg_fmt = _("%(images)s is not a permutation of degree %(degree)s.")


class InconsistentPortrait(PropertyViolation):
    _msg_fmt = _("Portrait data is inconsistent at %(where)s: %(reason)s")


class TypeMismatch(InputError):
    _msg_fmt = _("Residues have different types %(first)s and %(second)s.")


class NotHarmonious(InputError):
    _msg_fmt = _("Chambers %(source)s and %(target)s are not harmonious.")


class NotDistancePreserving(InputError):
    _msg_fmt = _("Partial map does not preserve the Weyl distance between "
                 "%(first)s and %(second)s.")


class InconsistentLocalActions(InputError):
    _msg_fmt = _("Parallel panels force different local actions on "
                 "tree-wall %(tree_wall)s.")


class NoValidLocalAction(InputError):
    _msg_fmt = _("No element of the local group of type %(label)s maps "
                 "color %(source)s to %(target)s.")


class TreeWallNotFixed(InputError):
    _msg_fmt = _("Automorphism moves chamber %(chamber)s of the tree-wall.")


class ParseError(InputError):
    _msg_fmt = _("Cannot parse specification at line %(line)s, position "
                 "%(pos)s: %(reason)s")


class SchemaError(InputError):
    _msg_fmt = _("Invalid specification field %(field)s: %(reason)s")


class UnknownSuite(InputError):
    _msg_fmt = _("Unknown suite %(suite)s, expected one of %(known)s.")
