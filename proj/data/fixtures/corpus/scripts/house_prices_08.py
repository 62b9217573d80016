# house prices notebook 8
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMRegressor
from sklearn.impute import SimpleImputer
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/house_prices.csv')
sns.boxplot(x=df['price'], y=df['roof_style'])
plt.show()
print(df['year_built'].value_counts())
print(df['city'].describe())
print(df['neighborhood'].describe())
print(df['garage_cars'].describe())
print(df.columns.tolist())
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
print(df.groupby('price')['neighborhood'].agg(['mean', 'count']).head(10))
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
print(df.head())
print(df.duplicated().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['lot_area'].dropna(), kde=True)
plt.title('lot_area distribution')
plt.show()
sns.boxplot(x=df['price'], y=df['city'])
plt.show()
sns.boxplot(x=df['price'], y=df['bathrooms'])
plt.show()
sns.boxplot(x=df['price'], y=df['heating'])
plt.show()
print(df.groupby('price')['year_built'].agg(['mean', 'count']).head(10))
print(df['city'].value_counts())
print(df['heating'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['roof_style'].dropna(), kde=True)
plt.title('roof_style distribution')
plt.show()
print(df['roof_style'].describe())
df = df.drop_duplicates()
df['neighborhood'] = df['neighborhood'].fillna(df['neighborhood'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=77)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = LGBMRegressor(num_leaves=63)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with house_prices')
