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

"""
Decision procedures on building specifications.

The restricted universal group G(F, F') of a thick irreducible building
of rank at least 2, with F = F' on rung types and not all F'_i free, is
virtually simple iff every F'_i is generated by point stabilizers and the
F'_i are transitive on some vertex cover of the diagram. The same local
conditions decide simplicity of U(F') for irreducible diagrams with not all
F'_i free.
"""

from oslo_log import log

from ra_buildings.common.i18n import _
from ra_buildings.common.i18n import _LI
from ra_buildings.permgrp import groups
from ra_buildings.universal import membership


LOG = log.getLogger(__name__)

PRECONDITION_FAILED = 'precondition_failed'

COLLAPSE_NONE = 'none'
COLLAPSE_LADDERFUL = 'G_equals_U_by_ladderful'
COLLAPSE_REDUCIBLE = 'reducible_decomposition'
COLLAPSE_EQUAL_DATA = 'G_equals_U_by_equal_data'

ALL_FREE_MESSAGE = 'all local groups free'


def _reason(code, message, **extra):
    reason = {'code': code, 'message': message}
    reason.update(extra)
    return reason


def _verdict(value, reasons):
    return {'value': value, 'reasons': reasons}


def _reduction(diagram):
    """What G(F, F') reduces to for a reducible diagram."""
    decomposition = diagram.decompose()
    m = len(decomposition.components)
    if m == 0:
        statement = 'G_equals_U_Facute'
        message = _('all nodes are isolated, G(F, Facute) = U(Facute)')
    elif m == 1:
        statement = 'G_of_component_times_F_of_isolated'
        message = _('G(F, Facute) is G of the component times the F_k of '
                    'the isolated nodes')
    else:
        statement = 'G_equals_U_F'
        message = _('at least two components, G(F, Facute) = U(F)')
    return {'m': m, 'statement': statement, 'message': message,
            'components': [diagram.sort_types(c)
                           for c in decomposition.components],
            'isolated': decomposition.isolated}


def _local_conditions(spec, analyses):
    """Reasons the point-stabilizer and vertex-cover conditions fail."""
    diagram = spec.diagram
    reasons = []
    for label in diagram.types:
        if not analyses[label].gen_by_point_stabs:
            reasons.append(_reason(
                'not_generated_by_point_stabilizers',
                _('Facute of type %s is not generated by point '
                  'stabilizers') % label, type=label))
    transitive = [t for t in diagram.types if spec.acute[t].is_transitive()]
    for edge in diagram.uncovered_edges(transitive):
        reasons.append(_reason(
            'not_transitive_on_vertex_cover',
            _('neither endpoint of the edge %(i)s-%(j)s has a transitive '
              'Facute') % {'i': edge[0], 'j': edge[1]}, edge=list(edge)))
    return reasons


def analyze(spec):
    """Compute the analysis report of a specification.

    :param spec: a BuildingSpec.
    :returns: a JSON-serializable dict.
    :raises: GroupTooLarge
    """
    diagram = spec.diagram
    params = spec.params
    building = spec.building
    decomposition = diagram.decompose()
    rungs = diagram.rung_types()
    ladderful = diagram.is_ladderful()
    thick = params.thick
    irreducible = decomposition.irreducible

    local_analyses = dict((t, groups.stabilizer_analysis(spec.local[t]))
                          for t in diagram.types)
    acute_analyses = dict((t, groups.stabilizer_analysis(spec.acute[t]))
                          for t in diagram.types)
    discrete = all(a.free for a in local_analyses.values())
    all_acute_free = all(a.free for a in acute_analyses.values())
    equal_data = all(spec.local[t].same_group(spec.acute[t])
                     for t in diagram.types)
    rung_violations = [t for t in diagram.sort_types(rungs)
                       if not spec.local[t].same_group(spec.acute[t])]
    rung_constraint_ok = not rung_violations

    if ladderful:
        collapse = COLLAPSE_LADDERFUL
    elif not irreducible:
        collapse = COLLAPSE_REDUCIBLE
    elif equal_data:
        collapse = COLLAPSE_EQUAL_DATA
    else:
        collapse = COLLAPSE_NONE

    census = membership.orbit_census(building, spec.local)

    preconditions = []
    if diagram.rank < 2:
        preconditions.append(_reason(
            'rank_too_small', _('the index set has fewer than two types')))
    if not irreducible:
        preconditions.append(_reason(
            'reducible', _('the diagram is reducible')))
    common = list(preconditions)
    if all_acute_free:
        common.append(_reason('all_free', ALL_FREE_MESSAGE))
    if not thick:
        for label in diagram.types:
            if params[label] < 3:
                preconditions.append(_reason(
                    'not_thick', _('q of type %s is below 3') % label,
                    type=label))
    if all_acute_free:
        preconditions.append(_reason('all_free', ALL_FREE_MESSAGE))
    for label in rung_violations:
        preconditions.append(_reason(
            'rung_constraint',
            _('F and Facute differ on the rung type %s') % label,
            type=label))

    conditions = _local_conditions(spec, acute_analyses)
    if common:
        u_acute = _verdict(PRECONDITION_FAILED, common)
    else:
        u_acute = _verdict(not conditions, conditions)
    if preconditions:
        g_simple = _verdict(PRECONDITION_FAILED, preconditions)
    else:
        g_simple = _verdict(not conditions, conditions)

    informational = {
        'combinatorially_dense': diagram.is_combinatorially_dense(),
        'normal_subgroups_open': irreducible and not ladderful,
        'closed_in_aut': rung_constraint_ok and equal_data,
        'generating_k_p_classes': census.count,
    }
    if rung_constraint_ok:
        informational['closure'] = _(
            'the closure of G(F, Facute) in Aut is U(Facute)')

    report = {
        'thick': thick,
        'irreducible': irreducible,
        'components': {
            'components': [diagram.sort_types(c)
                           for c in decomposition.components],
            'isolated': decomposition.isolated,
        },
        'rung_types': diagram.sort_types(rungs),
        'ladderful': ladderful,
        'collapse': collapse,
        'discrete': discrete,
        'all_acute_free': all_acute_free,
        'orbit_count': census.count,
        'rung_constraint_ok': rung_constraint_ok,
        'u_acute_simple': u_acute,
        'g_virtually_simple': g_simple,
        'informational': informational,
    }
    if not irreducible:
        report['reduction'] = _reduction(diagram)
    LOG.info(_LI('Analysis finished: collapse %(collapse)s, virtually '
                 'simple %(value)s'),
             {'collapse': collapse, 'value': g_simple['value']})
    return report
