package org.eclipse.jdt.core.dom;

public class CommentLookup {
    public Comment[] lookupLeading(ASTNode node) {
        int[] range = null;
        if (this.leadingPtr >= 0) {
            for (int i = 0; range == null && i <= this.leadingPtr; i++) {
                if (this.leadingNodes[i].equals(node)) range = this.leadingIndexes[i];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            Comment[] copy = new Comment[length];
            copyRange(range, copy);
            return copy;
        }
        return null;
    }

    public Comment[] lookupTrailing(ASTNode node) {
        int[] range = null;
        if (this.trailingPtr >= 0) {
            for (int j = 0; range == null && j <= this.trailingPtr; j++) {
                if (this.trailingNodes[j].equals(node)) range = this.trailingIndexes[j];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            Comment[] copy = new Comment[length];
            copyRange(range, copy);
            return copy;
        }
        return null;
    }

    public Comment[] lookupJavadoc(ASTNode node) {
        int[] range = null;
        if (this.javadocPtr >= 0) {
            for (int k = 0; range == null && k <= this.javadocPtr; k++) {
                if (this.javadocNodes[k].equals(node)) range = this.javadocIndexes[k];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            Comment[] copy = new Comment[length];
            copyRange(range, copy);
            return copy;
        }
        return null;
    }

    public Comment[] lookupLine(ASTNode node) {
        int[] range = null;
        if (this.linePtr >= 0) {
            for (int n = 0; range == null && n <= this.linePtr; n++) {
                if (this.lineNodes[n].equals(node)) range = this.lineIndexes[n];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            Comment[] copy = new Comment[length];
            copyRange(range, copy);
            return copy;
        }
        return null;
    }

    public Comment[] lookupBlock(ASTNode node) {
        int[] range = null;
        if (this.blockPtr >= 0) {
            for (int p = 0; range == null && p <= this.blockPtr; p++) {
                if (this.blockNodes[p].equals(node)) range = this.blockIndexes[p];
            }
        }
        if (range != null) {
            int length = range[1] - range[0] + 1;
            Comment[] copy = new Comment[length];
            copyRange(range, copy);
            return copy;
        }
        return null;
    }
}
