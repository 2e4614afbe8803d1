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

import json

from ra_buildings.common import exception
from ra_buildings.common.i18n import _


def validate_non_negative(value, name="Value"):
    """Validates a radius, depth or bound.

    :param value: an integer or a string holding one.
    :param name: name of the value used in the error message.
    :returns: the value as an integer.
    :raises: InvalidParameters, if the value is not a non-negative integer.
    """
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise exception.InvalidParameters(reason=_(
            '%(name)s "%(value)s" is not a valid integer.') %
            {'name': name, 'value': value})
    if value < 0:
        raise exception.InvalidParameters(reason=_(
            '%(name)s "%(value)s" must not be negative.') %
            {'name': name, 'value': value})
    return value


def dumps(obj):
    """Stable-ordered JSON used for every machine output."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(',', ': '))


def label_key(label):
    """Key of a type label inside JSON objects."""
    return str(label)
