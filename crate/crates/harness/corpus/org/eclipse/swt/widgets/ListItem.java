package org.eclipse.swt.widgets;

public class ListItem {
    public Font getFont() {
        checkWidget();
        if (!parent.checkData(this, false)) return null;
        return font != null ? font : parent.getFont();
    }

    public Color getBackground() {
        checkWidget();
        if (!parent.checkData(this, false)) return null;
        return background != null ? background : parent.getBackground();
    }

    public Color getForeground() {
        checkWidget();
        if (!parent.checkData(this, false)) return null;
        return foreground != null ? foreground : parent.getForeground();
    }

    public Image getImage() {
        checkWidget();
        if (!parent.checkData(this, false)) return null;
        return image != null ? image : parent.getImage();
    }

    public String getText() {
        checkWidget();
        if (!parent.checkData(this, false)) return null;
        return text != null ? text : parent.getText();
    }
}
