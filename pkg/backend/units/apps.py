from django.apps import AppConfig


class UnitsConfig(AppConfig):
    name = 'units'
    verbose_name = "Physical constants and unit conversions"
