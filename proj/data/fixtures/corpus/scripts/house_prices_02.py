# house prices notebook 2
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestRegressor
from sklearn.impute import SimpleImputer
from sklearn.linear_model import Lasso
from sklearn.preprocessing import StandardScaler
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/house_prices.csv')
print(df.groupby('price')['lot_area'].agg(['mean', 'count']).head(10))
print(df.isnull().sum().sort_values(ascending=False))
plt.figure(figsize=(8, 4))
sns.histplot(df['bathrooms'].dropna(), kde=True)
plt.title('bathrooms distribution')
plt.show()
print(df['year_built'].value_counts())
print(df.groupby('price')['heating'].agg(['mean', 'count']).head(10))
print(df['neighborhood'].describe())
print(df.head())
print(df['roof_style'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
sns.boxplot(x=df['price'], y=df['heating'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['sqft'].dropna(), kde=True)
plt.title('sqft distribution')
plt.show()
print(df.describe().T)
print(df['lot_area'].describe())
print(df['sqft'].value_counts())
sns.boxplot(x=df['price'], y=df['garage_cars'])
plt.show()
print(df.groupby('price')['roof_style'].agg(['mean', 'count']).head(10))
print(df.groupby('price')['sqft'].agg(['mean', 'count']).head(10))
print(df.groupby('price')['city'].agg(['mean', 'count']).head(10))
print(df.shape)
print('neighborhood unique:', df['neighborhood'].nunique(), 'missing:', df['neighborhood'].isnull().sum())
print('year_built unique:', df['year_built'].nunique(), 'missing:', df['year_built'].isnull().sum())
print(df.groupby('price')['garage_cars'].agg(['mean', 'count']).head(10))
print('garage_cars unique:', df['garage_cars'].nunique(), 'missing:', df['garage_cars'].isnull().sum())
sns.boxplot(x=df['price'], y=df['bathrooms'])
plt.show()
df = df.drop_duplicates()
df['year_built'] = df['year_built'].fillna(df['year_built'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=1)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
standa1 = StandardScaler()
X_train = standa1.fit_transform(X_train)
X_test = standa1.transform(X_test)
model = Lasso(alpha=0.001)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
simple_b0 = SimpleImputer(strategy='median')
X_train_b = simple_b0.fit_transform(X_train)
X_test_b = simple_b0.transform(X_test)
model_b = RandomForestRegressor(n_estimators=300, random_state=0)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('rmse', np.sqrt(mean_squared_error(y_test, pred_b)))
print('r2', r2_score(y_test, pred_b))
plt.scatter(y_test, pred_b, alpha=0.4)
plt.show()
print('done with house_prices')
