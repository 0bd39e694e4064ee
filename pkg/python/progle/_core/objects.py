#
#   Copyright 2021 The Progle Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#

import copy
import inspect
import math

from ..exceptions import ValidationError


__all__ = ['TypedProperty', 'FixedInterfaceObject', 'inRange']


class TypedProperty(object):
    """
    A data descriptor that conforms each value set on it to a type,
    optionally checks it with a validator, and stores it on the
    instance. It is the building block of @ref FixedInterfaceObject.

    @param typ type, Values are converted to this type. None is always
    accepted.

    @param initVal [None] The value each new instance starts with.

    @param doc str [None] Shown by help(), after the type name.

    @param order int [-1] Position of the property when listed, eg.
    when a configuration is echoed. Negative means unordered.

    @param validator callable [None] Called as validator(name, value)
    with each conformed value, raising a
    @ref progle.exceptions.ValidationError if it is out of its domain.
    """

    def __init__(self, typ, initVal=None, doc=None, order=-1, validator=None):
        super(TypedProperty, self).__init__()
        self.__doc__ = "[%s] %s" % (typ.__name__, doc) if doc else "[%s]" % typ.__name__
        self.typ = typ
        self.initialValue = initVal
        self.order = order
        self.validator = validator
        self.dataName = "__%s" % id(self)
        self.name = None

    def __set_name__(self, owner, name):
        self.name = name

    def __get__(self, obj, cls):
        if obj is None:
            return self
        return obj.__dict__.get(self.dataName)

    def __set__(self, obj, value):
        value = self.conform(value)
        if value is not None and self.validator is not None:
            self.validator(self.name, value)
        obj.__dict__[self.dataName] = value

    def conform(self, value):
        """
        @return The value converted to the property's type.

        @exception progle.exceptions.ValidationError If the value can't
        be represented by the type without loss.
        """
        if value is None or isinstance(value, self.typ):
            return value
        if self.typ is int and isinstance(value, float) and not value.is_integer():
            raise ValidationError("%s must be an integer, not %r" % (self.name, value))
        try:
            return self.typ(value)
        except (TypeError, ValueError) as exc:
            raise ValidationError("%s: %s" % (self.name, exc)) from exc


def inRange(low=None, high=None, lowInclusive=True, highInclusive=True):
    """
    Builds a validator for TypedProperty that accepts finite numbers
    within the supplied bounds. None leaves that side unbounded.
    """

    def _validate(name, value):
        if isinstance(value, float) and not math.isfinite(value):
            raise ValidationError("%s must be finite, not %r" % (name, value))
        if low is not None and (value < low or (value == low and not lowInclusive)):
            raise ValidationError("%s must be %s %r, not %r" % (
                name, ">=" if lowInclusive else ">", low, value))
        if high is not None and (value > high or (value == high and not highInclusive)):
            raise ValidationError("%s must be %s %r, not %r" % (
                name, "<=" if highInclusive else "<", high, value))

    return _validate


class FixedInterfaceObject(object):
    """
    A base for parameter objects whose attributes are exactly the
    TypedProperty members declared on the class. Setting or reading any
    other public attribute raises an AttributeError, so a misspelt
    option fails loudly instead of being ignored.

    @code
    class Settings(FixedInterfaceObject):
        count = TypedProperty(int, 1, doc="How many.", order=0)
    @endcode
    """

    ## Sort key of properties declared without an order.
    __kUnordered = float("inf")

    def __init__(self, **kwargs):
        super(FixedInterfaceObject, self).__init__()
        for name in self.definedPropertyNames():
            initial = getattr(type(self), name).initialValue
            if initial is not None:
                setattr(self, name, copy.copy(initial))
        for name, value in kwargs.items():
            setattr(self, name, value)

    def __unknown(self, name):
        return AttributeError("%s has no option '%s'" % (type(self).__name__, name))

    def __getattr__(self, name):
        # Only reached when normal lookup fails.
        raise self.__unknown(name)

    def __setattr__(self, name, value):
        if not name.startswith('_') and name not in self.definedPropertyNames():
            raise self.__unknown(name)
        object.__setattr__(self, name, value)

    def items(self):
        """
        @return list, (name, value) pairs of all properties, in their
        declared order.
        """
        return [(name, getattr(self, name)) for name in self.definedPropertyNames()]

    def asDict(self):
        return dict(self.items())

    @classmethod
    def definedPropertyNames(cls):
        """
        @return list(str), Property names sorted by their order, with
        unordered properties last.
        """
        members = inspect.getmembers(cls, lambda m: isinstance(m, TypedProperty))
        members.sort(key=lambda m: m[1].order if m[1].order > -1 else cls.__kUnordered)
        return [name for name, _ in members]
