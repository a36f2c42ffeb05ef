package org.eclipse.jdt.core.dom;

public class CommentIndex {
    public int indexOfLeading(ASTNode node) {
        if (this.leadingPtr >= 0) {
            for (int i = 0; i < this.leadingPtr; i++) {
                if (this.leadingNodes[i] == node) return i;
            }
        }
        return -1;
    }

    public int indexOfTrailing(ASTNode node) {
        if (this.trailingPtr >= 0) {
            for (int j = 0; j < this.trailingPtr; j++) {
                if (this.trailingNodes[j] == node) return j;
            }
        }
        return -1;
    }

    public int indexOfJavadoc(ASTNode node) {
        if (this.javadocPtr >= 0) {
            for (int k = 0; k < this.javadocPtr; k++) {
                if (this.javadocNodes[k] == node) return k;
            }
        }
        return -1;
    }

    public int indexOfLine(ASTNode node) {
        if (this.linePtr >= 0) {
            for (int n = 0; n < this.linePtr; n++) {
                if (this.lineNodes[n] == node) return n;
            }
        }
        return -1;
    }

    public int indexOfBlock(ASTNode node) {
        if (this.blockPtr >= 0) {
            for (int p = 0; p < this.blockPtr; p++) {
                if (this.blockNodes[p] == node) return p;
            }
        }
        return -1;
    }
}
