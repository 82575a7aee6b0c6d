from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from polysombor.radicals import eval_float


def radical_terms(value):
    return [{'radicand': radicand, 'num': c.numerator, 'den': c.denominator} for radicand, c in value.terms]


class RadicalTermSerializer(serializers.Serializer):
    radicand = serializers.IntegerField()
    num = serializers.IntegerField()
    den = serializers.IntegerField()


class RadicalSumSerializer(serializers.Serializer):
    terms = serializers.SerializerMethodField('retrieve_terms')
    value = serializers.SerializerMethodField('retrieve_value')

    def retrieve_terms(self, value):
        return RadicalTermSerializer(radical_terms(value), many=True).data

    def retrieve_value(self, value):
        return eval_float(value)


class CensusEntrySerializer(serializers.Serializer):
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    count = serializers.IntegerField()


class ReportRecordSerializer(serializers.Serializer):
    case = serializers.CharField()
    check = serializers.CharField()
    status = serializers.CharField()
    lhs = serializers.SerializerMethodField('retrieve_lhs')
    rhs = serializers.SerializerMethodField('retrieve_rhs')
    gap = serializers.FloatField()

    def retrieve_lhs(self, record):
        return RadicalTermSerializer(radical_terms(record.lhs), many=True).data

    def retrieve_rhs(self, record):
        return RadicalTermSerializer(radical_terms(record.rhs), many=True).data


def serialize_census(census):
    entries = [{'a': a, 'b': b, 'count': count} for (a, b), count in census.items_sorted()]
    return CensusEntrySerializer(entries, many=True).data


def render_json(data):
    return JSONRenderer().render(data).decode('utf-8')
