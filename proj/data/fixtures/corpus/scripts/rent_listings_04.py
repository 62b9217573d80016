# rent listings notebook 4
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestRegressor
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
df = pd.read_csv('../input/rent_listings.csv')
print(df.shape)
plt.figure(figsize=(8, 4))
sns.histplot(df['sqft'].dropna(), kde=True)
plt.title('sqft distribution')
plt.show()
sns.boxplot(x=df['monthly_rent'], y=df['year_built'])
plt.show()
print('sqft unique:', df['sqft'].nunique(), 'missing:', df['sqft'].isnull().sum())
sns.boxplot(x=df['monthly_rent'], y=df['city'])
plt.show()
print('neighborhood unique:', df['neighborhood'].nunique(), 'missing:', df['neighborhood'].isnull().sum())
plt.figure(figsize=(8, 4))
sns.histplot(df['lot_area'].dropna(), kde=True)
plt.title('lot_area distribution')
plt.show()
plt.figure(figsize=(8, 4))
sns.histplot(df['neighborhood'].dropna(), kde=True)
plt.title('neighborhood distribution')
plt.show()
print(df['garage_cars'].describe())
print(df.groupby('monthly_rent')['sqft'].agg(['mean', 'count']).head(10))
print(df['bathrooms'].value_counts())
print(df['year_built'].describe())
print(df.groupby('monthly_rent')['garage_cars'].agg(['mean', 'count']).head(10))
print(df.info())
print(df['bedrooms'].describe())
print(df['heating'].describe())
sns.boxplot(x=df['monthly_rent'], y=df['heating'])
plt.show()
print('heating unique:', df['heating'].nunique(), 'missing:', df['heating'].isnull().sum())
df = df.drop_duplicates()
df['bedrooms'] = df['bedrooms'].fillna(df['bedrooms'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = np.log1p(df['monthly_rent'])
X = df.drop(['monthly_rent'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=47)
print(X_train.shape, X_test.shape)
model = RandomForestRegressor(n_estimators=300, random_state=0)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('rmse', np.sqrt(mean_squared_error(y_test, pred)))
print('r2', r2_score(y_test, pred))
plt.scatter(y_test, pred, alpha=0.4)
plt.show()
print('done with rent_listings')
