package org.eclipse.jdt.core.dom;

public class CommentSlice {
    public Comment[] sliceLeading(ASTNode node) {
        int[] range = null;
        for (int i = 0; range == null && i <= this.leadingPtr; i++) {
            if (this.leadingNodes[i] == node) range = this.leadingIndexes[i];
        }
        if (this.leadingPtr >= 0) {
            if (range != null) {
                int length = range[1] - range[0] + 1;
                Comment[] copy = new Comment[length];
                copyRange(range, copy);
                return copy;
            }
        }
        return null;
    }

    public Comment[] sliceTrailing(ASTNode node) {
        int[] range = null;
        for (int j = 0; range == null && j <= this.trailingPtr; j++) {
            if (this.trailingNodes[j] == node) range = this.trailingIndexes[j];
        }
        if (this.trailingPtr >= 0) {
            if (range != null) {
                int length = range[1] - range[0] + 1;
                Comment[] copy = new Comment[length];
                copyRange(range, copy);
                return copy;
            }
        }
        return null;
    }

    public Comment[] sliceJavadoc(ASTNode node) {
        int[] range = null;
        for (int k = 0; range == null && k <= this.javadocPtr; k++) {
            if (this.javadocNodes[k] == node) range = this.javadocIndexes[k];
        }
        if (this.javadocPtr >= 0) {
            if (range != null) {
                int length = range[1] - range[0] + 1;
                Comment[] copy = new Comment[length];
                copyRange(range, copy);
                return copy;
            }
        }
        return null;
    }

    public Comment[] sliceLine(ASTNode node) {
        int[] range = null;
        for (int n = 0; range == null && n <= this.linePtr; n++) {
            if (this.lineNodes[n] == node) range = this.lineIndexes[n];
        }
        if (this.linePtr >= 0) {
            if (range != null) {
                int length = range[1] - range[0] + 1;
                Comment[] copy = new Comment[length];
                copyRange(range, copy);
                return copy;
            }
        }
        return null;
    }

    public Comment[] sliceBlock(ASTNode node) {
        int[] range = null;
        for (int p = 0; range == null && p <= this.blockPtr; p++) {
            if (this.blockNodes[p] == node) range = this.blockIndexes[p];
        }
        if (this.blockPtr >= 0) {
            if (range != null) {
                int length = range[1] - range[0] + 1;
                Comment[] copy = new Comment[length];
                copyRange(range, copy);
                return copy;
            }
        }
        return null;
    }
}
