# rent listings notebook 3
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from xgboost import XGBRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
import os
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/rent_listings.csv')
sns.boxplot(x=df['monthly_rent'], y=df['bathrooms'])
plt.show()
print(df['lot_area'].describe())
print(df['sqft'].value_counts())
sns.boxplot(x=df['monthly_rent'], y=df['bedrooms'])
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['city'].dropna(), kde=True)
plt.title('city distribution')
plt.show()
print(df.groupby('monthly_rent')['heating'].agg(['mean', 'count']).head(10))
print(df.shape)
print(df.groupby('monthly_rent')['garage_cars'].agg(['mean', 'count']).head(10))
print(df['year_built'].value_counts())
print(df.groupby('monthly_rent')['sqft'].agg(['mean', 'count']).head(10))
print('heating unique:', df['heating'].nunique(), 'missing:', df['heating'].isnull().sum())
print(df['roof_style'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['garage_cars'].dropna(), kde=True)
plt.title('garage_cars distribution')
plt.show()
print(df['garage_cars'].describe())
print('bedrooms unique:', df['bedrooms'].nunique(), 'missing:', df['bedrooms'].isnull().sum())
print(df.groupby('monthly_rent')['year_built'].agg(['mean', 'count']).head(10))
print(df['bedrooms'].value_counts())
print(df['lot_area'].value_counts())
plt.figure(figsize=(8, 4))
sns.histplot(df['year_built'].dropna(), kde=True)
plt.title('year_built distribution')
plt.show()
sns.boxplot(x=df['monthly_rent'], y=df['city'])
plt.show()
df = df.drop_duplicates()
df['roof_style'] = df['roof_style'].fillna(df['roof_style'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['monthly_rent'])
X = df.drop(['monthly_rent'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=2)
print(X_train.shape, X_test.shape)
model = XGBRegressor(n_estimators=500, learning_rate=0.03)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with rent_listings')
