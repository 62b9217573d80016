"""Writes the committed fixture corpus: scripts, datasets, domain tables, toy CSV.

Deterministic: rerunning reproduces every file byte for byte.
"""
import json
import random
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent
SEED = 20240517


# ---------------------------------------------------------------- tables

FIRST = ["anna", "ben", "carla", "dmitri", "elena", "farid", "greta", "hiro", "ines", "jonas", "kofi", "lena",
         "marco", "nadia", "oscar", "priya", "quinn", "rosa", "sven", "tara"]
CITIES = ["springfield", "riverton", "lakeside", "fairview", "greenville", "oakridge", "maplewood", "brookfield"]


def fmt(x, digits=2):
    return f"{x:.{digits}f}"


def with_missing(rng, values, rate):
    return ["" if rng.random() < rate else v for v in values]


class Domain:
    """Column generators sharing value vocabulary and ranges."""

    def __init__(self, name, columns):
        self.name = name
        self.columns = columns  # name -> fn(rng, n) -> list[str]


def health():
    return Domain("health", {
        "age": lambda r, n: [str(int(v)) for v in r.integers(18, 90, n)],
        "sex": lambda r, n: list(r.choice(["male", "female"], n)),
        "resting_bp": lambda r, n: [str(int(v)) for v in r.normal(130, 17, n).clip(90, 200)],
        "cholesterol": lambda r, n: [str(int(v)) for v in r.normal(240, 50, n).clip(120, 560)],
        "max_heart_rate": lambda r, n: [str(int(v)) for v in r.normal(150, 22, n).clip(70, 205)],
        "bmi": lambda r, n: [fmt(v, 1) for v in r.normal(27, 5, n).clip(15, 55)],
        "glucose": lambda r, n: [str(int(v)) for v in r.normal(110, 30, n).clip(50, 250)],
        "smoker": lambda r, n: list(r.choice(["yes", "no"], n, p=[0.25, 0.75])),
        "chest_pain": lambda r, n: list(r.choice(["typical angina", "atypical angina", "non-anginal", "asymptomatic"], n)),
        "blood_type": lambda r, n: list(r.choice(["a+", "a-", "b+", "o+", "o-", "ab+"], n)),
    })


def finance():
    return Domain("finance", {
        "credit_limit": lambda r, n: [str(int(v) * 1000) for v in r.integers(1, 80, n)],
        "balance": lambda r, n: [fmt(v) for v in r.lognormal(8, 1.2, n)],
        "payment_status": lambda r, n: list(r.choice(["paid_duly", "delay_1m", "delay_2m", "revolving"], n)),
        "account_type": lambda r, n: list(r.choice(["checking", "savings", "credit", "brokerage"], n)),
        "interest_rate": lambda r, n: [fmt(v, 3) for v in r.uniform(0.01, 0.29, n)],
        "currency": lambda r, n: list(r.choice(["usd", "eur", "gbp", "jpy"], n, p=[0.6, 0.2, 0.15, 0.05])),
        "transaction_amount": lambda r, n: [fmt(v) for v in r.lognormal(4, 1.5, n)],
        "tenure_months": lambda r, n: [str(int(v)) for v in r.integers(1, 120, n)],
        "num_products": lambda r, n: [str(int(v)) for v in r.integers(1, 5, n)],
        "iban_country": lambda r, n: list(r.choice(["de", "fr", "es", "it", "nl"], n)),
    })


def housing():
    return Domain("housing", {
        "sqft": lambda r, n: [str(int(v)) for v in r.normal(1900, 700, n).clip(350, 6500)],
        "bedrooms": lambda r, n: [str(int(v)) for v in r.integers(1, 7, n)],
        "bathrooms": lambda r, n: [fmt(v, 1) for v in r.choice([1, 1.5, 2, 2.5, 3, 3.5], n)],
        "year_built": lambda r, n: [str(int(v)) for v in r.integers(1900, 2022, n)],
        "neighborhood": lambda r, n: list(r.choice(["north ridge", "old town", "harbor view", "west end", "college hill"], n)),
        "lot_area": lambda r, n: [str(int(v)) for v in r.lognormal(9, 0.5, n)],
        "garage_cars": lambda r, n: [str(int(v)) for v in r.integers(0, 4, n)],
        "roof_style": lambda r, n: list(r.choice(["gable", "hip", "flat", "mansard"], n)),
        "heating": lambda r, n: list(r.choice(["gas forced air", "hot water", "electric", "heat pump"], n)),
        "city": lambda r, n: list(r.choice(CITIES, n)),
    })


REVIEW_WORDS = ["great", "terrible", "love", "hate", "product", "quality", "shipping", "fast", "slow", "price",
                "worth", "broken", "excellent", "return", "recommend", "never", "again", "perfect", "cheap", "size"]


def reviews():
    def sentence(r):
        k = int(r.integers(6, 18))
        return " ".join(r.choice(REVIEW_WORDS, k))

    return Domain("reviews", {
        "review_text": lambda r, n: [sentence(r) for _ in range(n)],
        "rating": lambda r, n: [str(int(v)) for v in r.integers(1, 6, n)],
        "helpful_votes": lambda r, n: [str(int(v)) for v in r.poisson(3, n)],
        "verified": lambda r, n: list(r.choice(["true", "false"], n, p=[0.8, 0.2])),
        "product_category": lambda r, n: list(r.choice(["electronics", "books", "kitchen", "toys", "garden"], n)),
        "reviewer": lambda r, n: [f"{r.choice(FIRST)}_{int(r.integers(10, 999))}" for _ in range(n)],
        "title": lambda r, n: [" ".join(r.choice(REVIEW_WORDS, 3)) for _ in range(n)],
    })


def sensors():
    return Domain("sensors", {
        "device_id": lambda r, n: [f"dev-{int(v):04d}" for v in r.integers(1, 60, n)],
        "temperature_c": lambda r, n: [fmt(v, 3) for v in r.normal(22.5, 2.0, n)],
        "humidity_pct": lambda r, n: [fmt(v, 3) for v in r.normal(45, 8, n).clip(5, 99)],
        "pressure_hpa": lambda r, n: [fmt(v, 3) for v in r.normal(1013, 6, n)],
        "voltage": lambda r, n: [fmt(v, 4) for v in r.normal(3.3, 0.05, n)],
        "timestamp": lambda r, n: [f"2023-0{int(m)}-1{int(d)}T{int(h):02d}:{int(mi):02d}:00"
                                   for m, d, h, mi in zip(r.integers(1, 9, n), r.integers(0, 9, n),
                                                          r.integers(0, 24, n), r.integers(0, 60, n))],
        "status": lambda r, n: list(r.choice(["ok", "warn", "fault"], n, p=[0.9, 0.08, 0.02])),
        "vibration_rms": lambda r, n: [fmt(v, 5) for v in r.gamma(2, 0.01, n)],
    })


def sports():
    teams = ["falcons", "wolves", "tigers", "sharks", "eagles", "bears", "lions", "hawks"]
    return Domain("sports", {
        "home_team": lambda r, n: list(r.choice(teams, n)),
        "away_team": lambda r, n: list(r.choice(teams, n)),
        "home_goals": lambda r, n: [str(int(v)) for v in r.poisson(1.5, n)],
        "away_goals": lambda r, n: [str(int(v)) for v in r.poisson(1.1, n)],
        "season": lambda r, n: [f"20{int(v)}-{int(v) + 1}" for v in r.integers(10, 23, n)],
        "player": lambda r, n: [f"{r.choice(FIRST)} {r.choice(FIRST)}son" for _ in range(n)],
        "minutes_played": lambda r, n: [str(int(v)) for v in r.integers(0, 91, n)],
        "position": lambda r, n: list(r.choice(["goalkeeper", "defender", "midfielder", "forward"], n)),
        "attendance": lambda r, n: [str(int(v)) for v in r.normal(24000, 9000, n).clip(800, 80000)],
    })


DOMAINS = [health(), finance(), housing(), reviews(), sensors(), sports()]


def write_csv(path, header, columns):
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = zip(*columns)
    with open(path, "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(f'"{v}"' if ("," in v or '"' in v) else v for v in row) + "\n")


def domain_tables(rng):
    """38 tables: 7/7/6/6/6/6 over the six domains, random column subsets."""
    counts = [7, 7, 6, 6, 6, 6]
    out = {}
    for dom, count in zip(DOMAINS, counts):
        names = list(dom.columns)
        for i in range(count):
            k = int(rng.integers(max(3, len(names) // 2), len(names) + 1))
            cols = sorted(rng.choice(names, k, replace=False), key=names.index)
            n = int(rng.integers(150, 400))
            data = [with_missing(rng, dom.columns[c](rng, n), 0.02) for c in cols]
            table = f"{dom.name}_{i + 1:02d}"
            write_csv(ROOT / "domains" / f"{table}.csv", cols, data)
            out[table] = dom.name
    (ROOT / "domains" / "domains.json").write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")


# ------------------------------------------------------- corpus datasets

# name -> (domain, task, target, pipeline families as (preprocessors, estimator, weight))
DATASETS = {
    "heart": ("health", "classification", "disease", [
        (["StandardScaler"], "LogisticRegression", 4), ([], "RandomForestClassifier", 3),
        (["StandardScaler"], "KNeighborsClassifier", 2), ([], "XGBClassifier", 2)]),
    "diabetes": ("health", "classification", "outcome", [
        (["SimpleImputer", "StandardScaler"], "LogisticRegression", 4), (["SimpleImputer"], "RandomForestClassifier", 3),
        (["SimpleImputer"], "XGBClassifier", 2)]),
    "stroke": ("health", "classification", "stroke", [
        (["SimpleImputer", "StandardScaler"], "LogisticRegression", 3), (["SimpleImputer"], "RandomForestClassifier", 3),
        (["SimpleImputer"], "LGBMClassifier", 2)]),
    "churn": ("finance", "classification", "exited", [
        (["OneHotEncoder", "StandardScaler"], "LogisticRegression", 2), ([], "XGBClassifier", 4),
        ([], "LGBMClassifier", 3), ([], "RandomForestClassifier", 2)]),
    "credit_default": ("finance", "classification", "default", [
        (["StandardScaler"], "LogisticRegression", 3), ([], "XGBClassifier", 3), ([], "LGBMClassifier", 3)]),
    "loan_approval": ("finance", "classification", "approved", [
        (["SimpleImputer", "OneHotEncoder"], "RandomForestClassifier", 3), (["SimpleImputer"], "XGBClassifier", 3),
        (["SimpleImputer", "StandardScaler"], "LogisticRegression", 2)]),
    "house_prices": ("housing", "regression", "price", [
        (["SimpleImputer", "StandardScaler"], "Lasso", 2), (["SimpleImputer"], "XGBRegressor", 4),
        (["SimpleImputer"], "RandomForestRegressor", 3), (["SimpleImputer"], "LGBMRegressor", 2)]),
    "rent_listings": ("housing", "regression", "monthly_rent", [
        (["StandardScaler"], "ElasticNet", 2), ([], "RandomForestRegressor", 3), ([], "XGBRegressor", 3)]),
    "product_reviews": ("reviews", "classification", "sentiment", [
        (["TfidfVectorizer"], "LogisticRegression", 4), (["CountVectorizer"], "MultinomialNB", 2),
        (["TfidfVectorizer", "TruncatedSVD"], "LinearSVC", 2)]),
    "machine_failure": ("sensors", "classification", "failure", [
        (["StandardScaler"], "RandomForestClassifier", 3), (["StandardScaler", "PCA"], "LogisticRegression", 2),
        ([], "ExtraTreesClassifier", 2), ([], "XGBClassifier", 2)]),
    "energy_load": ("sensors", "regression", "load_kw", [
        (["MinMaxScaler"], "KNeighborsRegressor", 2), ([], "RandomForestRegressor", 3),
        (["StandardScaler", "PolynomialFeatures"], "Lasso", 2), ([], "LGBMRegressor", 2)]),
    "match_outcomes": ("sports", "classification", "home_win", [
        ([], "RandomForestClassifier", 3), (["OrdinalEncoder"], "XGBClassifier", 3),
        (["OneHotEncoder"], "LogisticRegression", 2)]),
}

# Estimator-bearing scripts per dataset, sums to 82.
SCRIPTS_PER_DATASET = {"heart": 9, "diabetes": 8, "stroke": 6, "churn": 8, "credit_default": 7, "loan_approval": 6,
                       "house_prices": 9, "rent_listings": 6, "product_reviews": 6, "machine_failure": 6,
                       "energy_load": 6, "match_outcomes": 5}


def dataset_table(rng, name):
    dom_name, task, target, _ = DATASETS[name]
    dom = next(d for d in DOMAINS if d.name == dom_name)
    cols = list(dom.columns)
    n = int(rng.integers(250, 450))
    data = [with_missing(rng, dom.columns[c](rng, n), 0.03) for c in cols]
    if task == "classification":
        y = [str(int(v)) for v in rng.integers(0, 2, n)]
    else:
        y = [fmt(v) for v in rng.lognormal(7, 0.6, n)]
    write_csv(ROOT / "corpus" / "datasets" / f"{name}.csv", cols + [target], data + [y])
    return cols


MODULE = {
    "StandardScaler": "sklearn.preprocessing", "MinMaxScaler": "sklearn.preprocessing",
    "OneHotEncoder": "sklearn.preprocessing", "OrdinalEncoder": "sklearn.preprocessing",
    "PolynomialFeatures": "sklearn.preprocessing", "SimpleImputer": "sklearn.impute",
    "PCA": "sklearn.decomposition", "TruncatedSVD": "sklearn.decomposition",
    "TfidfVectorizer": "sklearn.feature_extraction.text", "CountVectorizer": "sklearn.feature_extraction.text",
    "LogisticRegression": "sklearn.linear_model", "Lasso": "sklearn.linear_model", "ElasticNet": "sklearn.linear_model",
    "RandomForestClassifier": "sklearn.ensemble", "RandomForestRegressor": "sklearn.ensemble",
    "ExtraTreesClassifier": "sklearn.ensemble", "KNeighborsClassifier": "sklearn.neighbors",
    "KNeighborsRegressor": "sklearn.neighbors", "MultinomialNB": "sklearn.naive_bayes", "LinearSVC": "sklearn.svm",
    "XGBClassifier": "xgboost", "XGBRegressor": "xgboost", "LGBMClassifier": "lightgbm", "LGBMRegressor": "lightgbm",
}

PARAMS = {
    "RandomForestClassifier": "n_estimators=200, max_depth=8, random_state=42",
    "RandomForestRegressor": "n_estimators=300, random_state=0",
    "ExtraTreesClassifier": "n_estimators=150",
    "XGBClassifier": "n_estimators=300, learning_rate=0.05, max_depth=4",
    "XGBRegressor": "n_estimators=500, learning_rate=0.03",
    "LGBMClassifier": "num_leaves=31, n_estimators=200",
    "LGBMRegressor": "num_leaves=63",
    "LogisticRegression": "max_iter=1000, C=0.5",
    "Lasso": "alpha=0.001",
    "ElasticNet": "alpha=0.01, l1_ratio=0.5",
    "KNeighborsClassifier": "n_neighbors=7",
    "KNeighborsRegressor": "n_neighbors=5",
    "LinearSVC": "C=1.0",
    "MultinomialNB": "",
    "PCA": "n_components=5",
    "TruncatedSVD": "n_components=50",
    "PolynomialFeatures": "degree=2",
    "SimpleImputer": "strategy='median'",
    "OneHotEncoder": "handle_unknown='ignore'",
    "OrdinalEncoder": "",
    "TfidfVectorizer": "max_features=5000",
    "CountVectorizer": "",
    "StandardScaler": "",
    "MinMaxScaler": "",
}


def imports_block(ops, rng):
    lines = ["import numpy as np", "import pandas as pd", "import matplotlib.pyplot as plt", "import seaborn as sns",
             "import warnings", "from sklearn.model_selection import train_test_split"]
    by_module = {}
    for op in ops:
        by_module.setdefault(MODULE[op], []).append(op)
    for mod in sorted(by_module):
        names = sorted(set(by_module[mod]))
        lines.append(f"from {mod} import {', '.join(names)}")
    metrics = ["accuracy_score", "classification_report", "confusion_matrix", "mean_squared_error", "r2_score"]
    lines.append(f"from sklearn.metrics import {', '.join(metrics)}")
    if rng.random() < 0.5:
        lines.append("import os")
    return lines


def eda_block(rng, cols, target, n_lines):
    """Exploratory calls that never touch the modeling path's operators."""
    pool = []
    for c in cols:
        pool += [
            f"print(df['{c}'].value_counts())",
            f"print(df['{c}'].describe())",
            f"plt.figure(figsize=(8, 4))\nsns.histplot(df['{c}'].dropna(), kde=True)\nplt.title('{c} distribution')\nplt.show()",
            f"sns.boxplot(x=df['{target}'], y=df['{c}'])\nplt.show()",
            f"print(df.groupby('{target}')['{c}'].agg(['mean', 'count']).head(10))",
            f"print('{c} unique:', df['{c}'].nunique(), 'missing:', df['{c}'].isnull().sum())",
        ]
    pool += [
        "print(df.shape)", "print(df.head())", "print(df.info())", "print(df.describe().T)",
        "print(df.isnull().sum().sort_values(ascending=False))", "print(df.dtypes)",
        "corr = df.select_dtypes(include=[np.number]).corr()\nplt.figure(figsize=(12, 10))\n"
        "sns.heatmap(corr, annot=True, cmap='coolwarm')\nplt.show()",
        f"sns.countplot(x='{target}', data=df)\nplt.show()",
        "print(df.duplicated().sum())", "print(df.columns.tolist())",
    ]
    order = rng.permutation(len(pool))
    out = []
    for i in order:
        out += pool[int(i)].split("\n")
        if len(out) >= n_lines:
            break
    return out


def feature_block(rng, cols, target, task):
    out = [f"df = df.drop_duplicates()"]
    c = str(rng.choice(cols))
    out += [f"df['{c}'] = df['{c}'].fillna(df['{c}'].mode()[0])"]
    out += [f"for col in df.select_dtypes(include='object').columns:",
            f"    print(col, df[col].nunique())"]
    if task == "classification":
        out += [f"y = df['{target}']"]
    else:
        out += [f"y = np.log1p(df['{target}'])"]
    out += [f"X = df.drop(['{target}'], axis=1)", "X = pd.get_dummies(X, drop_first=True)",
            "X = X.fillna(X.median())",
            f"X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state={int(rng.integers(0, 100))})",
            "print(X_train.shape, X_test.shape)"]
    return out


def model_block(pre, est, task, suffix=""):
    out = []
    xtr, xte = "X_train", "X_test"
    for i, op in enumerate(pre):
        var = f"{op.lower()[:6]}{suffix}{i}"
        out.append(f"{var} = {op}({PARAMS[op]})")
        out.append(f"{xtr}{suffix} = {var}.fit_transform({xtr if i == 0 else xtr + suffix})")
        out.append(f"{xte}{suffix} = {var}.transform({xte if i == 0 else xte + suffix})")
    a = f"{xtr}{suffix}" if pre else xtr
    b = f"{xte}{suffix}" if pre else xte
    m = f"model{suffix}"
    out.append(f"{m} = {est}({PARAMS[est]})")
    out.append(f"{m}.fit({a}, y_train)")
    out.append(f"pred{suffix} = {m}.predict({b})")
    if task == "classification":
        out += [f"print('accuracy', accuracy_score(y_test, pred{suffix}))",
                f"print(classification_report(y_test, pred{suffix}))",
                f"cm = confusion_matrix(y_test, pred{suffix})",
                "sns.heatmap(cm, annot=True, fmt='d')", "plt.show()"]
    else:
        out += [f"print('rmse', np.sqrt(mean_squared_error(y_test, pred{suffix})))",
                f"print('r2', r2_score(y_test, pred{suffix}))",
                f"plt.scatter(y_test, pred{suffix}, alpha=0.4)", "plt.show()"]
    return out


def pick_family(rng, families):
    weights = np.array([w for _, _, w in families], dtype=float)
    i = int(rng.choice(len(families), p=weights / weights.sum()))
    return families[i][0], families[i][1]


def write_script(path, lines):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")


def corpus(rng):
    scripts = ROOT / "corpus" / "scripts"
    sidecar = {}
    census = {"estimator_scripts": 0, "eda_scripts": 0, "lex_error_scripts": 0, "unknown_dataset_scripts": 0}
    columns = {name: dataset_table(rng, name) for name in DATASETS}
    serial = 0
    for name, count in SCRIPTS_PER_DATASET.items():
        _, task, target, families = DATASETS[name]
        cols = columns[name]
        for j in range(count):
            serial += 1
            fid = f"{name}_{j + 1:02d}.py"
            pre, est = pick_family(rng, families)
            second = pick_family(rng, families) if rng.random() < 0.2 else None
            ops = pre + [est] + ((second[0] + [second[1]]) if second else [])
            lines = [f"# {name.replace('_', ' ')} notebook {j + 1}"] + imports_block(ops, rng)
            lines.append("warnings.filterwarnings('ignore')")
            # Path style: literal, or a variable resolved through the sidecar.
            style = serial % 9
            if style == 0 and census["unknown_dataset_scripts"] < 2:
                lines.append("DATA_DIR = '../input/'")
                lines.append("df = pd.read_csv(DATA_DIR + 'train.csv')")
                census["unknown_dataset_scripts"] += 1
            elif style in (0, 4):
                lines.append(f"path = '../input/{name}/' + 'data.csv'")
                lines.append("df = pd.read_csv(path)")
                sidecar[fid] = name
            else:
                lines.append(f"df = pd.read_csv('../input/{name}.csv')")
            lines += eda_block(rng, cols, target, int(rng.integers(28, 38)))
            lines += feature_block(rng, cols, target, task)
            lines += model_block(pre, est, task)
            if second:
                lines += model_block(second[0], second[1], task, suffix="_b")
            lines.append(f"print('done with {name}')")
            write_script(scripts / fid, lines)
            census["estimator_scripts"] += 1
    # Exploration-only notebooks.
    eda_names = ["heart", "churn", "house_prices", "product_reviews", "machine_failure", "match_outcomes", "stroke",
                 "energy_load"]
    for i, name in enumerate(eda_names):
        _, _, target, _ = DATASETS[name]
        lines = [f"# exploring {name}", "import numpy as np", "import pandas as pd", "import matplotlib.pyplot as plt",
                 "import seaborn as sns", f"df = pd.read_csv('../input/{name}.csv')"]
        lines += eda_block(rng, columns[name], target, 60)
        write_script(scripts / f"eda_{i + 1:02d}.py", lines)
        census["eda_scripts"] += 1
    # Scripts the lexer refuses.
    write_script(scripts / "broken_01.py", ["import pandas as pd", "df = pd.read_csv('../input/heart.csv)",
                                            "print(df.head())"])
    (scripts / "broken_02.py").write_bytes(b"import pandas as pd\nname = '\xff\xfe'\n")
    census["lex_error_scripts"] = 2
    (ROOT / "corpus" / "sidecar.json").write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    (ROOT / "corpus" / "census.json").write_text(json.dumps(census, indent=2) + "\n")


def toy(rng):
    """5,000-row heart-like table for recommend latency runs."""
    dom = DOMAINS[0]
    cols = list(dom.columns)
    n = 5000
    data = [with_missing(rng, dom.columns[c](rng, n), 0.01) for c in cols]
    y = [str(int(v)) for v in rng.integers(0, 2, n)]
    write_csv(ROOT / "toy" / "clinic_visits.csv", cols + ["disease"], data + [y])


def sensor_log(rng):
    """10,000-row sensor table for the subsample stability check."""
    dom = DOMAINS[4]
    cols = list(dom.columns)
    n = 10000
    data = [with_missing(rng, dom.columns[c](rng, n), 0.01) for c in cols]
    write_csv(ROOT / "toy" / "sensor_log.csv", cols, data)


def main():
    rng = np.random.default_rng(SEED)
    random.seed(SEED)
    domain_tables(rng)
    corpus(rng)
    toy(rng)
    sensor_log(rng)


if __name__ == "__main__":
    main()
