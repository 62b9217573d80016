# house prices notebook 5
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestRegressor
from sklearn.impute import SimpleImputer
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
path = '../input/house_prices/' + 'data.csv'
df = pd.read_csv(path)
print(df.shape)
print(df.groupby('price')['city'].agg(['mean', 'count']).head(10))
print(df['bathrooms'].describe())
print(df['garage_cars'].describe())
plt.figure(figsize=(8, 4))
sns.histplot(df['heating'].dropna(), kde=True)
plt.title('heating distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['bathrooms'].dropna(), kde=True)
plt.title('bathrooms distribution')
plt.show()
print(df['city'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['bedrooms'].dropna(), kde=True)
plt.title('bedrooms distribution')
plt.show()
print(df['neighborhood'].value_counts())
sns.boxplot(x=df['price'], y=df['bathrooms'])
plt.show()
print(df['lot_area'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['lot_area'].dropna(), kde=True)
plt.title('lot_area distribution')
plt.show()
print(df.groupby('price')['bathrooms'].agg(['mean', 'count']).head(10))
print(df['city'].describe())
print(df['roof_style'].describe())
df = df.drop_duplicates()
df['city'] = df['city'].fillna(df['city'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['price'])
X = df.drop(['price'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=39)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = RandomForestRegressor(n_estimators=300, random_state=0)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with house_prices')
