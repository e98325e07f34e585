from enum import Enum


class ChoiceEnum(Enum):

    @classmethod
    def choices(cls):
        """
        :return: tuple of (value, name) pairs, usable as serializer choices
        """
        return tuple((member.value, member.name) for member in cls)

    @classmethod
    def values(cls):
        return tuple(member.value for member in cls)


class ChoiceStringEnum(str, ChoiceEnum):

    def __str__(self):
        return self.value
