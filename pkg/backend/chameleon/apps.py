from django.apps import AppConfig


class ChameleonConfig(AppConfig):
    name = 'chameleon'
    verbose_name = "Chameleon field between parallel plates"
