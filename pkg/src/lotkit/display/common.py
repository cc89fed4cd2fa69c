def flag_color(value):
    return "green" if value else "red"


def reason_color(reason):
    if reason is None:
        return "yellow"
    elif reason == "maximal_complexity":
        return "magenta"
    elif reason == "amalgam_of_aspherical":
        return "cyan"
    else:
        return "green"


def verdict_color(violations):
    return "green" if violations == 0 else "red"
