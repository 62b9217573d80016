# energy load notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMRegressor
from sklearn.linear_model import Lasso
from sklearn.preprocessing import PolynomialFeatures, StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
path = '../input/energy_load/' + 'data.csv'
df = pd.read_csv(path)
print(df.groupby('load_kw')['temperature_c'].agg(['mean', 'count']).head(10))
print(df.groupby('load_kw')['timestamp'].agg(['mean', 'count']).head(10))
print('humidity_pct unique:', df['humidity_pct'].nunique(), 'missing:', df['humidity_pct'].isnull().sum())
print(df.groupby('load_kw')['device_id'].agg(['mean', 'count']).head(10))
print(df.describe().T)
plt.figure(figsize=(8, 4))
sns.histplot(df['pressure_hpa'].dropna(), kde=True)
plt.title('pressure_hpa distribution')
plt.show()
print(df['voltage'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['temperature_c'].dropna(), kde=True)
plt.title('temperature_c distribution')
plt.show()
print(df.groupby('load_kw')['status'].agg(['mean', 'count']).head(10))
print(df['vibration_rms'].value_counts())
sns.boxplot(x=df['load_kw'], y=df['device_id'])
plt.show()
print('temperature_c unique:', df['temperature_c'].nunique(), 'missing:', df['temperature_c'].isnull().sum())
print(df['status'].value_counts())
print(df.duplicated().sum())
print('device_id unique:', df['device_id'].nunique(), 'missing:', df['device_id'].isnull().sum())
print('pressure_hpa unique:', df['pressure_hpa'].nunique(), 'missing:', df['pressure_hpa'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['humidity_pct'].dropna(), kde=True)
plt.title('humidity_pct distribution')
plt.show()
print(df.isnull().sum().sort_values(ascending=False))
plt.figure(figsize=(8, 4))
sns.histplot(df['timestamp'].dropna(), kde=True)
plt.title('timestamp distribution')
plt.show()
df = df.drop_duplicates()
df['humidity_pct'] = df['humidity_pct'].fillna(df['humidity_pct'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['load_kw'])
X = df.drop(['load_kw'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=54)
print(X_train.shape, X_test.shape)
model = LGBMRegressor(num_leaves=63)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
standa_b0 = StandardScaler()
X_train_b = standa_b0.fit_transform(X_train)
X_test_b = standa_b0.transform(X_test)
polyno_b1 = PolynomialFeatures(degree=2)
X_train_b = polyno_b1.fit_transform(X_train_b)
X_test_b = polyno_b1.transform(X_test_b)
model_b = Lasso(alpha=0.001)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('rmse', np.sqrt(mean_squared_error(y_test, pred_b)))
print('r2', r2_score(y_test, pred_b))
plt.scatter(y_test, pred_b, alpha=0.4)
plt.show()
print('done with energy_load')
