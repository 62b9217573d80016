# stroke notebook 1
import numpy as np
import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
import warnings
from sklearn.model_selection import train_test_split
from lightgbm import LGBMClassifier
from sklearn.ensemble import RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix, mean_squared_error, r2_score
warnings.filterwarnings('ignore')
DATA_DIR = '../input/'
df = pd.read_csv(DATA_DIR + 'train.csv')
print(df.groupby('stroke')['resting_bp'].agg(['mean', 'count']).head(10))
plt.figure(figsize=(8, 4))
sns.histplot(df['resting_bp'].dropna(), kde=True)
plt.title('resting_bp distribution')
plt.show()
sns.boxplot(x=df['stroke'], y=df['resting_bp'])
plt.show()
sns.boxplot(x=df['stroke'], y=df['glucose'])
plt.show()
sns.boxplot(x=df['stroke'], y=df['sex'])
plt.show()
print(df['glucose'].describe())
sns.boxplot(x=df['stroke'], y=df['bmi'])
plt.show()
print(df['blood_type'].describe())
print(df.columns.tolist())
print(df['glucose'].value_counts())
print(df['smoker'].value_counts())
print('glucose unique:', df['glucose'].nunique(), 'missing:', df['glucose'].isnull().sum())
sns.boxplot(x=df['stroke'], y=df['chest_pain'])
plt.show()
print(df.duplicated().sum())
print(df['cholesterol'].describe())
print(df['age'].describe())
print(df.info())
print('blood_type unique:', df['blood_type'].nunique(), 'missing:', df['blood_type'].isnull().sum())
sns.boxplot(x=df['stroke'], y=df['blood_type'])
plt.show()
print(df.head())
print(df.dtypes)
corr = df.select_dtypes(include=[np.number]).corr()
plt.figure(figsize=(12, 10))
sns.heatmap(corr, annot=True, cmap='coolwarm')
plt.show()
df = df.drop_duplicates()
df['glucose'] = df['glucose'].fillna(df['glucose'].mode()[0])
for col in df.select_dtypes(include='object').columns:
    print(col, df[col].nunique())
y = df['stroke']
X = df.drop(['stroke'], axis=1)
X = pd.get_dummies(X, drop_first=True)
X = X.fillna(X.median())
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=93)
print(X_train.shape, X_test.shape)
simple0 = SimpleImputer(strategy='median')
X_train = simple0.fit_transform(X_train)
X_test = simple0.transform(X_test)
model = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
model.fit(X_train, y_train)
pred = model.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))
print(classification_report(y_test, pred))
cm = confusion_matrix(y_test, pred)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
simple_b0 = SimpleImputer(strategy='median')
X_train_b = simple_b0.fit_transform(X_train)
X_test_b = simple_b0.transform(X_test)
model_b = LGBMClassifier(num_leaves=31, n_estimators=200)
model_b.fit(X_train_b, y_train)
pred_b = model_b.predict(X_test_b)
print('accuracy', accuracy_score(y_test, pred_b))
print(classification_report(y_test, pred_b))
cm = confusion_matrix(y_test, pred_b)
sns.heatmap(cm, annot=True, fmt='d')
plt.show()
print('done with stroke')
