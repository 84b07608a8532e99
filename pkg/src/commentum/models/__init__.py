"""Binary classifiers over feature vectors, implemented natively.

Decision rules: logistic regression, linear SVM, and external scores
predict Useful when the score is >= 0; Naive Bayes, KNN, trees, and
forests predict Useful only when their vote/posterior margin is strictly
positive, so exact ties fall to Not Useful.
"""

from .base import (
    TrainConfig,
    TrainedModel,
    PRESETS,
    cross_entropy_loss,
    sigmoid,
    load_model,
    save_model,
    predict,
    predict_batch,
    to_dense,
    to_csr,
)
from .linear import (
    LogRegModel,
    SvmModel,
    train_logreg,
    train_svm,
    logreg_objective,
    svm_objective,
)
from .bayes import NaiveBayesModel, train_nb
from .tree import TreeModel, ForestModel, train_tree, train_forest, gini
from .neighbors import KnnModel, train_knn
from .external import ExternalPredictions, load_external_predictions

TRAINERS = {
    "nb": train_nb,
    "logreg": train_logreg,
    "svm": train_svm,
    "tree": train_tree,
    "forest": train_forest,
    "knn": train_knn,
}

ALGORITHM_LABELS = {
    "nb": "Naive Bayes (Multinomial Naive Bayes)",
    "logreg": "Logistic Regression",
    "svm": "Support Vector Machine (SVM)",
    "tree": "Decision Tree",
    "forest": "Random Forest Classifier",
    "knn": "k-Nearest Neighbors (KNN) Classifier",
}

__all__ = [
    "TrainConfig", "TrainedModel", "PRESETS", "cross_entropy_loss", "sigmoid",
    "load_model", "save_model", "predict", "predict_batch", "to_dense", "to_csr",
    "LogRegModel", "SvmModel", "train_logreg", "train_svm",
    "logreg_objective", "svm_objective",
    "NaiveBayesModel", "train_nb",
    "TreeModel", "ForestModel", "train_tree", "train_forest", "gini",
    "KnnModel", "train_knn",
    "ExternalPredictions", "load_external_predictions",
    "TRAINERS", "ALGORITHM_LABELS",
]
