from django.apps import AppConfig


class NumericsConfig(AppConfig):
    name = 'numerics'
    verbose_name = "Quadrature and root-finding engines"
